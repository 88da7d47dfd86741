#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spectra/vertex_set.hpp"

namespace spectra {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..order()-1, immutable once built.
class Graph {
 public:
  /// The empty graph on zero vertices.
  Graph() = default;
  /// The edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Rejects loops, out-of-range endpoints and n > kMaxVertices. Duplicate
  /// edges collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const noexcept { return adj_.size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }

  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  /// Makes `members` a clique.
  GraphBuilder& add_clique(const std::vector<Vertex>& members);

  Graph build() const;

 private:
  std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the source graph that became vertex i.
  std::vector<Vertex> original;
};

/// Union of N(x) over x in X. Members of X appear only when adjacent to X.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x);

/// G - S with the survivors relabelled contiguously in increasing order.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

/// Components of G, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the subgraph induced by `alive`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& alive);

/// c(G - S).
std::size_t component_count_without(const Graph& g, const VertexSet& s);

/// o(G - S).
std::size_t odd_component_count(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

std::size_t degree(const Graph& g, Vertex v);

/// Disjoint union; the second graph's labels are shifted by first.order().
Graph disjoint_union(const Graph& first, const Graph& second);

/// Disjoint union of all graphs in order.
Graph disjoint_union(std::span<const Graph> parts);

/// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& first, const Graph& second);

/// t disjoint copies of g (t >= 1).
Graph copies(std::size_t t, const Graph& g);

/// Relabels: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace spectra
