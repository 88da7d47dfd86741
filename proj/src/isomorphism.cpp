#include "spectra/isomorphism.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>

#include "spectra/error.hpp"

namespace spectra {

namespace {

constexpr double kSpectrumTolerance = 1e-9;

// Joint 1-dimensional Weisfeiler-Leman refinement so colours are comparable
// across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = static_cast<int>(a.degree(v));
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = static_cast<int>(b.degree(v));

  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig{c[v]};
      std::vector<int> around;
      g.neighbors(v).for_each([&](Vertex u) { around.push_back(c[u]); });
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(a.order()), sb(b.order());
    for (Vertex v = 0; v < a.order(); ++v) palette.emplace(sa[v] = signature(a, ca, v), 0);
    for (Vertex v = 0; v < b.order(); ++v) palette.emplace(sb[v] = signature(b, cb, v), 0);
    int next = 0;
    for (auto& [sig, colour] : palette) colour = next++;
    for (Vertex v = 0; v < a.order(); ++v) ca[v] = palette[sa[v]];
    for (Vertex v = 0; v < b.order(); ++v) cb[v] = palette[sb[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb, std::size_t budget)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), budget_(budget),
        map_(a.order(), VertexSet::npos), used_(b.order(), false) {
    order_vertices();
  }

  bool run() { return extend(0); }
  const std::vector<Vertex>& mapping() const { return map_; }
  std::size_t nodes() const { return nodes_; }

 private:
  // Rarest colour first, then grow along adjacency so each new vertex is
  // constrained by already-mapped neighbours.
  void order_vertices() {
    const std::size_t n = a_.order();
    std::map<int, std::size_t> freq;
    for (int c : ca_) ++freq[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = VertexSet::npos;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == VertexSet::npos || links[v] > links[best] ||
            (links[v] == links[best] && freq[ca_[v]] < freq[ca_[best]])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      a_.neighbors(best).for_each([&](Vertex u) { ++links[u]; });
    }
  }

  bool consistent(Vertex v, Vertex w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (a_.adjacent(v, u) != b_.adjacent(w, map_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      throw TimeoutError("isomorphism search exceeded node budget of " + std::to_string(budget_),
                         nodes_);
    }
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || cb_[w] != ca_[v] || !consistent(v, w, depth)) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = VertexSet::npos;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_, cb_;
  std::size_t budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<double> adjacency_spectrum(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

IsomorphismResult are_isomorphic(const Graph& first, const Graph& second, std::size_t node_budget) {
  IsomorphismResult result;
  if (first.order() != second.order() || first.edge_count() != second.edge_count()) return result;

  auto da = first.degrees();
  auto db = second.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return result;

  const auto sa = adjacency_spectrum(first);
  const auto sb = adjacency_spectrum(second);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (std::abs(sa[i] - sb[i]) > kSpectrumTolerance) return result;
  }

  auto [ca, cb] = refine_colours(first, second);
  auto ha = ca;
  auto hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return result;

  Matcher matcher(first, second, std::move(ca), std::move(cb), node_budget);
  result.isomorphic = matcher.run();
  result.nodes = matcher.nodes();
  if (result.isomorphic) result.mapping = matcher.mapping();
  return result;
}

bool is_isomorphism(const Graph& first, const Graph& second, const std::vector<Vertex>& mapping) {
  if (first.order() != second.order() || first.edge_count() != second.edge_count() ||
      mapping.size() != first.order()) {
    return false;
  }
  std::vector<bool> hit(second.order(), false);
  for (Vertex w : mapping) {
    if (w >= second.order() || hit[w]) return false;
    hit[w] = true;
  }
  for (const Edge& e : first.edges()) {
    if (!second.adjacent(mapping[e.u], mapping[e.v])) return false;
  }
  return true;
}

}  // namespace spectra
