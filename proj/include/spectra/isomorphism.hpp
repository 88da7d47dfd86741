#pragma once

#include <cstddef>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr std::size_t kDefaultIsomorphismBudget = 1'000'000;

struct IsomorphismResult {
  bool isomorphic = false;
  /// mapping[v] is the image in the second graph of vertex v of the first;
  /// empty unless isomorphic.
  std::vector<Vertex> mapping;
  std::size_t nodes = 0;
};

/// All adjacency eigenvalues, ascending.
std::vector<double> adjacency_spectrum(const Graph& g);

/// Screens on degree sequence, spectrum (to 1e-9) and colour refinement, then
/// backtracks over colour-compatible assignments. Throws TimeoutError once the
/// search expands more than `node_budget` nodes. Intended for n <= 40.
IsomorphismResult are_isomorphic(const Graph& first, const Graph& second,
                                 std::size_t node_budget = kDefaultIsomorphismBudget);

/// True iff `mapping` is an edge-preserving bijection from first onto second.
bool is_isomorphism(const Graph& first, const Graph& second, const std::vector<Vertex>& mapping);

}  // namespace spectra
