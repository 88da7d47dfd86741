#include "spectra/ktree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "spectra/error.hpp"
#include "subsets.hpp"

namespace spectra {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw UsageError(std::string(what) + " requires a connected graph");
}

void require_k(std::size_t k) {
  if (k < 2) throw UsageError("k must be >= 2 (got k=" + std::to_string(k) + ")");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Local search towards a minimum-degree spanning tree. Each round marks the
// vertices of degree >= max-1 and looks for non-tree edges joining different
// components of (tree - marked). An edge whose tree path crosses a max-degree
// vertex yields a swap; otherwise the degree max-1 vertices on the path are
// unmarked and remember the edge, so a later swap can first relieve them.
class LocalSearchTree {
 public:
  explicit LocalSearchTree(const Graph& g)
      : g_(g), n_(g.order()), t_(n_, VertexSet(n_)), deg_(n_, 0), marked_(n_, false), rec_(n_) {
    // Depth-first tree: long paths make a good starting point.
    VertexSet seen(n_);
    std::vector<Vertex> stack{0};
    std::vector<Vertex> parent(n_, VertexSet::npos);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (seen.contains(v)) continue;
      seen.insert(v);
      if (parent[v] != VertexSet::npos) link(parent[v], v);
      const auto nbrs = g.neighbors(v).to_vector();
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
        if (!seen.contains(*it)) {
          parent[*it] = v;
          stack.push_back(*it);
        }
      }
    }
  }

  SpanningTree run() {
    while (improve_once()) {
    }
    SpanningTree out;
    for (Vertex u = 0; u < n_; ++u) {
      t_[u].for_each([&](Vertex v) {
        if (u < v) out.edges.push_back({u, v});
      });
    }
    out.max_degree = n_ == 0 ? 0 : *std::max_element(deg_.begin(), deg_.end());
    out.witness = witness_;
    return out;
  }

 private:
  void link(Vertex a, Vertex b) {
    t_[a].insert(b);
    t_[b].insert(a);
    ++deg_[a];
    ++deg_[b];
  }

  void unlink(Vertex a, Vertex b) {
    t_[a].erase(b);
    t_[b].erase(a);
    --deg_[a];
    --deg_[b];
  }

  std::vector<Vertex> tree_path(Vertex from, Vertex to) const {
    std::vector<Vertex> parent(n_, VertexSet::npos);
    std::vector<Vertex> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size() && parent[to] == VertexSet::npos; ++head) {
      t_[queue[head]].for_each([&](Vertex w) {
        if (parent[w] == VertexSet::npos) {
          parent[w] = queue[head];
          queue.push_back(w);
        }
      });
    }
    std::vector<Vertex> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Adds (a, b) and drops the tree edge after `w` on the a-b path.
  void swap_through(Vertex w, Vertex a, Vertex b) {
    const auto path = tree_path(a, b);
    const auto it = std::find(path.begin(), path.end(), w);
    if (it == path.end() || it + 1 == path.end()) {
      throw std::logic_error("local search invariant broken: vertex not interior to its cycle");
    }
    unlink(*it, *(it + 1));
    link(a, b);
  }

  void relieve_if_needed(Vertex v) {
    if (deg_[v] + 1 >= delta_) relieve(v);
  }

  void relieve(Vertex w) {
    if (!rec_[w]) throw std::logic_error("local search invariant broken: no recorded edge to relieve vertex");
    const Edge e = *rec_[w];
    rec_[w].reset();
    relieve_if_needed(e.u);
    relieve_if_needed(e.v);
    swap_through(w, e.u, e.v);
  }

  bool improve_once() {
    if (n_ <= 2) return false;
    delta_ = *std::max_element(deg_.begin(), deg_.end());
    witness_ = VertexSet(n_);
    if (delta_ <= 2) return false;

    for (Vertex v = 0; v < n_; ++v) {
      marked_[v] = deg_[v] + 1 >= delta_;
      rec_[v].reset();
    }
    DisjointSets forest(n_);
    for (Vertex u = 0; u < n_; ++u) {
      if (marked_[u]) continue;
      t_[u].for_each([&](Vertex v) {
        if (!marked_[v]) forest.unite(u, v);
      });
    }

    std::vector<Edge> spare;
    for (const Edge& e : g_.edges()) {
      if (!t_[e.u].contains(e.v)) spare.push_back(e);
    }

    bool progress = true;
    while (progress) {
      progress = false;
      for (const Edge& e : spare) {
        if (marked_[e.u] || marked_[e.v] || forest.find(e.u) == forest.find(e.v)) continue;
        const auto path = tree_path(e.u, e.v);
        for (Vertex x : path) {
          if (marked_[x] && deg_[x] == delta_) {
            relieve_if_needed(e.u);
            relieve_if_needed(e.v);
            swap_through(x, e.u, e.v);
            return true;
          }
        }
        for (Vertex x : path) {
          if (marked_[x]) {
            marked_[x] = false;
            rec_[x] = e;
          }
        }
        for (Vertex x : path) {
          t_[x].for_each([&](Vertex y) {
            if (!marked_[y]) forest.unite(x, y);
          });
        }
        progress = true;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (marked_[v]) witness_.insert(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<VertexSet> t_;
  std::vector<std::size_t> deg_;
  std::vector<bool> marked_;
  std::vector<std::optional<Edge>> rec_;
  std::size_t delta_ = 0;
  VertexSet witness_;
};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::size_t k, std::size_t budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget), in_tree_(n_), deg_(n_, 0),
        forbidden_(n_, VertexSet(n_)) {}

  ExactTreeResult run() {
    ExactTreeResult out;
    if (n_ <= 1) {
      out.status = KTreeStatus::yes;
      out.tree_edges = std::vector<Edge>{};
      return out;
    }
    in_tree_.insert(0);
    const bool found = search();
    out.nodes = nodes_;
    if (found) {
      out.status = KTreeStatus::yes;
      std::vector<Edge> edges = edges_;
      for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
      }
      std::sort(edges.begin(), edges.end());
      out.tree_edges = std::move(edges);
    } else {
      out.status = exhausted_budget_ ? KTreeStatus::unknown : KTreeStatus::no;
    }
    return out;
  }

 private:
  VertexSet usable(Vertex v) const { return g_.neighbors(v) - forbidden_[v]; }

  bool feasible(const VertexSet& open, const VertexSet& unreached) const {
    const auto pieces = components(g_, unreached);
    std::size_t capacity = 0;
    open.for_each([&](Vertex w) {
      capacity += std::min(k_ - deg_[w], (usable(w) & unreached).count());
    });
    if (capacity < pieces.size()) return false;
    for (const auto& piece : pieces) {
      bool reachable = false;
      piece.for_each([&](Vertex u) { reachable = reachable || usable(u).intersects(open); });
      if (!reachable) return false;
    }
    return true;
  }

  bool search() {
    if (++nodes_ > budget_) {
      exhausted_budget_ = true;
      return false;
    }
    if (in_tree_.count() == n_) return true;

    VertexSet open(n_);
    in_tree_.for_each([&](Vertex w) {
      if (deg_[w] < k_) open.insert(w);
    });
    const VertexSet unreached = in_tree_.complement();
    if (!feasible(open, unreached)) return false;

    // Branch on the frontier vertex with the fewest ways to attach.
    Vertex u = VertexSet::npos;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    unreached.for_each([&](Vertex v) {
      const std::size_t options = (usable(v) & open).count();
      if (options > 0 && options < fewest) {
        fewest = options;
        u = v;
      }
    });
    Vertex w = VertexSet::npos;
    (usable(u) & open).for_each([&](Vertex cand) {
      if (w == VertexSet::npos || deg_[cand] < deg_[w]) w = cand;
    });

    in_tree_.insert(u);
    ++deg_[w];
    ++deg_[u];
    edges_.push_back({w, u});
    if (search()) return true;
    edges_.pop_back();
    --deg_[u];
    --deg_[w];
    in_tree_.erase(u);
    if (exhausted_budget_) return false;

    forbidden_[w].insert(u);
    forbidden_[u].insert(w);
    const bool found = search();
    forbidden_[w].erase(u);
    forbidden_[u].erase(w);
    return found;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  std::size_t budget_;
  VertexSet in_tree_;
  std::vector<std::size_t> deg_;
  std::vector<VertexSet> forbidden_;
  std::vector<Edge> edges_;
  std::size_t nodes_ = 0;
  bool exhausted_budget_ = false;
};

std::optional<VertexSet> cut_violation(const Graph& g, std::size_t max_size,
                                       std::size_t per_vertex, std::size_t constant) {
  std::optional<VertexSet> found;
  for (std::size_t size = 1; size <= max_size && !found; ++size) {
    detail::for_each_subset(g.order(), size, [&](const VertexSet& s) {
      if (component_count_without(g, s) > per_vertex * size + constant) {
        found = s;
        return true;
      }
      return false;
    });
  }
  return found;
}

// Subsets the pipeline is willing to scan for a cut certificate before
// falling through to the later stages.
constexpr double kPipelineSubsetBudget = 2e6;

// Largest size bound <= max_size whose cumulative subset count stays within
// the pipeline budget.
std::size_t affordable_size(std::size_t n, std::size_t max_size) {
  double total = 0.0;
  double choose = 1.0;
  for (std::size_t size = 1; size <= max_size; ++size) {
    choose = choose * static_cast<double>(n - size + 1) / static_cast<double>(size);
    total += choose;
    if (total > kPipelineSubsetBudget) return size - 1;
  }
  return max_size;
}

KTreeDecision with_tree(std::string method, std::vector<Edge> edges, std::size_t nodes = 0) {
  KTreeDecision d;
  d.status = KTreeStatus::yes;
  d.method = std::move(method);
  d.tree_edges = std::move(edges);
  d.nodes = nodes;
  return d;
}

KTreeDecision with_cut(std::string method, VertexSet s) {
  KTreeDecision d;
  d.status = KTreeStatus::no;
  d.method = std::move(method);
  d.violating_set = std::move(s);
  return d;
}

KTreeDecision from_exact(const ExactTreeResult& r, std::string method) {
  KTreeDecision d;
  d.status = r.status;
  d.method = std::move(method);
  d.tree_edges = r.tree_edges;
  d.nodes = r.nodes;
  return d;
}

}  // namespace

std::string to_string(KTreeStatus status) {
  switch (status) {
    case KTreeStatus::yes: return "yes";
    case KTreeStatus::no: return "no";
    case KTreeStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(KTreeMethod method) {
  switch (method) {
    case KTreeMethod::automatic: return "auto";
    case KTreeMethod::win: return "win";
    case KTreeMethod::necessary: return "necessary";
    case KTreeMethod::mdst: return "mdst";
    case KTreeMethod::exact: return "exact";
  }
  return "auto";
}

KTreeMethod parse_ktree_method(const std::string& text) {
  for (auto m : {KTreeMethod::automatic, KTreeMethod::win, KTreeMethod::necessary, KTreeMethod::mdst,
                 KTreeMethod::exact}) {
    if (to_string(m) == text) return m;
  }
  throw UsageError("unknown k-tree method '" + text + "' (expected auto|win|necessary|mdst|exact)");
}

std::optional<VertexSet> win_condition_violating_set(const Graph& g, std::size_t k) {
  require_k(k);
  require_connected(g, "Win's condition");
  if (g.order() < 3) return std::nullopt;
  return cut_violation(g, (g.order() - 3) / (k - 1), k - 2, 2);
}

std::optional<VertexSet> ktree_necessary_violating_set(const Graph& g, std::size_t k) {
  require_k(k);
  require_connected(g, "the spanning-tree cut condition");
  if (g.order() < 2) return std::nullopt;
  return cut_violation(g, (g.order() - 2) / k, k - 1, 1);
}

SpanningTree min_degree_spanning_tree(const Graph& g) {
  require_connected(g, "min_degree_spanning_tree");
  if (g.order() == 0) return {};
  return LocalSearchTree(g).run();
}

ExactTreeResult exact_spanning_ktree(const Graph& g, std::size_t k, std::size_t budget) {
  require_k(k);
  require_connected(g, "exact spanning-tree search");
  return ExactSearch(g, k, budget).run();
}

KTreeDecision has_spanning_ktree(const Graph& g, std::size_t k, std::size_t budget) {
  require_k(k);
  require_connected(g, "has_spanning_ktree");

  const SpanningTree local = min_degree_spanning_tree(g);
  if (local.max_degree <= k) return with_tree("mdst", local.edges);

  // A partial scan is still sound for the necessary condition; Win's
  // condition is only trusted after a complete scan.
  const std::size_t n = g.order();
  const std::size_t necessary_max = (n - 2) / k;
  if (auto s = cut_violation(g, affordable_size(n, necessary_max), k - 1, 1)) return with_cut("necessary", *s);

  const std::size_t win_max = n >= 3 ? (n - 3) / (k - 1) : 0;
  if (affordable_size(n, win_max) == win_max && !cut_violation(g, win_max, k - 2, 2)) {
    const auto exact = exact_spanning_ktree(g, k, budget);
    if (exact.status == KTreeStatus::no) {
      throw std::logic_error("exact search found no spanning k-tree although Win's condition holds");
    }
    return from_exact(exact, "win");
  }

  if (local.max_degree >= k + 2) {
    KTreeDecision d;
    d.status = KTreeStatus::no;
    d.method = "mdst-bound";
    const auto& w = local.witness;
    if (!w.empty() && component_count_without(g, w) > (k - 1) * w.count() + 1) d.violating_set = w;
    return d;
  }

  return from_exact(exact_spanning_ktree(g, k, budget), "exact");
}

KTreeDecision decide_spanning_ktree(const Graph& g, std::size_t k, KTreeMethod method, std::size_t budget) {
  switch (method) {
    case KTreeMethod::automatic: return has_spanning_ktree(g, k, budget);
    case KTreeMethod::necessary: {
      if (auto s = ktree_necessary_violating_set(g, k)) return with_cut("necessary", *s);
      KTreeDecision d;
      d.method = "necessary";
      return d;
    }
    case KTreeMethod::win: {
      if (auto s = win_condition_violating_set(g, k)) {
        KTreeDecision d;
        d.method = "win";
        d.violating_set = *s;
        return d;
      }
      const SpanningTree local = min_degree_spanning_tree(g);
      if (local.max_degree <= k) return with_tree("win", local.edges);
      return from_exact(exact_spanning_ktree(g, k, budget), "win");
    }
    case KTreeMethod::mdst: {
      require_k(k);
      const SpanningTree local = min_degree_spanning_tree(g);
      if (local.max_degree <= k) return with_tree("mdst", local.edges);
      KTreeDecision d;
      d.method = "mdst";
      if (local.max_degree >= k + 2) d.status = KTreeStatus::no;
      return d;
    }
    case KTreeMethod::exact: return from_exact(exact_spanning_ktree(g, k, budget), "exact");
  }
  return has_spanning_ktree(g, k, budget);
}

bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges) {
  const std::size_t n = g.order();
  if (n == 0) return edges.empty();
  if (edges.size() != n - 1) return false;
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n || !g.adjacent(e.u, e.v)) return false;
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

std::size_t tree_max_degree(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace spectra
