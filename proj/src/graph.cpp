#include "spectra/graph.hpp"

#include <algorithm>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) +
                     " vertices");
  }
}

void check_same_owner(const Graph& g, const VertexSet& s, const char* what) {
  if (s.size() != g.order()) {
    throw UsageError(std::string(what) + " indexes " + std::to_string(s.size()) +
                     " vertices but the graph has " + std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices) {
    throw UsageError("vertex count " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }
  adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return builder.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = adj_[u].next(u); v != VertexSet::npos; v = adj_[u].next(v)) out.push_back({u, v});
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = adj_[v].count();
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  if (n > kMaxVertices) {
    throw UsageError("vertex count " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }
  adj_.assign(n, VertexSet(n));
}

GraphBuilder::GraphBuilder(const Graph& g) {
  adj_.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj_.push_back(g.neighbors(v));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(order(), u);
  check_vertex(order(), v);
  if (u == v) throw UsageError("loop at vertex " + std::to_string(u) + " is not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_vertex(order(), u);
  check_vertex(order(), v);
  adj_[u].erase(v);
  adj_[v].erase(u);
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) add_edge(members[i], members[j]);
  }
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.adj_ = adj_;
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  g.edge_count_ = twice / 2;
  return g;
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x) {
  check_same_owner(g, x, "vertex set");
  VertexSet out(g.order());
  x.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  check_same_owner(g, s, "deleted set");
  InducedSubgraph out;
  std::vector<Vertex> relabel(g.order(), VertexSet::npos);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) {
      relabel[v] = out.original.size();
      out.original.push_back(v);
    }
  }
  GraphBuilder builder(out.original.size());
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] != VertexSet::npos && relabel[e.v] != VertexSet::npos) {
      builder.add_edge(relabel[e.u], relabel[e.v]);
    }
  }
  out.graph = builder.build();
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all_vertices()); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& alive) {
  check_same_owner(g, alive, "vertex set");
  std::vector<VertexSet> out;
  VertexSet remaining = alive;
  for (Vertex start = remaining.first(); start != VertexSet::npos; start = remaining.first()) {
    VertexSet comp(g.order(), {start});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet reached(g.order());
      frontier.for_each([&](Vertex v) { reached |= g.neighbors(v); });
      reached &= remaining;
      reached -= comp;
      comp |= reached;
      frontier = reached;
    }
    remaining -= comp;
    out.push_back(comp);
  }
  return out;
}

std::size_t component_count_without(const Graph& g, const VertexSet& s) {
  check_same_owner(g, s, "deleted set");
  return components(g, s.complement()).size();
}

std::size_t odd_component_count(const Graph& g, const VertexSet& s) {
  check_same_owner(g, s, "deleted set");
  std::size_t odd = 0;
  for (const auto& comp : components(g, s.complement())) odd += comp.count() % 2;
  return odd;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::size_t degree(const Graph& g, Vertex v) {
  check_vertex(g.order(), v);
  return g.degree(v);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const Graph parts[] = {first, second};
  return disjoint_union(parts);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.order();
  GraphBuilder builder(n);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const Edge& e : p.edges()) builder.add_edge(e.u + offset, e.v + offset);
    offset += p.order();
  }
  return builder.build();
}

Graph join(const Graph& first, const Graph& second) {
  GraphBuilder builder(disjoint_union(first, second));
  for (Vertex u = 0; u < first.order(); ++u) {
    for (Vertex v = 0; v < second.order(); ++v) builder.add_edge(u, first.order() + v);
  }
  return builder.build();
}

Graph copies(std::size_t t, const Graph& g) {
  if (t < 1) throw UsageError("copies requires t >= 1");
  const std::vector<Graph> parts(t, g);
  return disjoint_union(parts);
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw UsageError("permutation length does not match graph order");
  std::vector<bool> seen(g.order(), false);
  for (Vertex p : perm) {
    if (p >= g.order() || seen[p]) throw UsageError("relabelling is not a permutation");
    seen[p] = true;
  }
  GraphBuilder builder(g.order());
  for (const Edge& e : g.edges()) builder.add_edge(perm[e.u], perm[e.v]);
  return builder.build();
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace spectra
