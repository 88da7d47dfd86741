#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr std::size_t kTinyFactorEdgeLimit = 24;

struct FactorDecision {
  bool exists = false;
  std::size_t b = 1;
  /// Present iff !exists: some S with o(G-S) > b|S|.
  std::optional<VertexSet> violating_set;
  /// o(G - S) at the violating set (0 when exists).
  std::size_t odd_count = 0;
  /// Filled only when construction was requested and succeeded.
  std::optional<std::vector<Edge>> factor_edges;
};

/// First S, by size then lexicographically, with o(G-S) > b|S|. Only sizes
/// |S| <= (n-1)/(b+1) are searched: o(G-S) <= n-|S| makes larger S unable to
/// violate. The empty set is searched first.
std::optional<VertexSet> odd_factor_violating_set(const Graph& g, std::size_t b);

/// Odd [1,b]-factor existence via the odd-component criterion.
/// With `construct`, also runs construct_odd_factor_tiny (subject to its cap)
/// when a factor exists.
FactorDecision has_odd_factor(const Graph& g, std::size_t b, bool construct = false);

/// Exhaustive search over edge subsets for a spanning subgraph whose degrees
/// are all odd and <= b. Throws CapabilityError when e(G) > max_edges.
std::optional<std::vector<Edge>> construct_odd_factor_tiny(const Graph& g, std::size_t b,
                                                           std::size_t max_edges = kTinyFactorEdgeLimit);

/// Checks that `edges` are edges of g and give every vertex odd degree <= b.
bool is_odd_factor(const Graph& g, const std::vector<Edge>& edges, std::size_t b);

}  // namespace spectra
