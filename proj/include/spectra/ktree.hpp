#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

inline constexpr std::size_t kDefaultKTreeBudget = 10'000'000;

enum class KTreeStatus { yes, no, unknown };

enum class KTreeMethod { automatic, win, necessary, mdst, exact };

std::string to_string(KTreeStatus status);
std::string to_string(KTreeMethod method);
KTreeMethod parse_ktree_method(const std::string& text);

struct KTreeDecision {
  KTreeStatus status = KTreeStatus::unknown;
  /// Which test produced the verdict: "mdst", "necessary", "win", "mdst-bound" or "exact".
  std::string method;
  std::optional<std::vector<Edge>> tree_edges;
  /// For status no: an S with c(G-S) > (k-1)|S|+1. With method win and
  /// status unknown: the S violating Win's condition.
  std::optional<VertexSet> violating_set;
  std::size_t nodes = 0;
};

/// An S with c(G-S) > (k-2)|S|+2, searched for |S| <= (n-3)/(k-1). Absence
/// guarantees a spanning k-tree. Requires G connected and k >= 2.
std::optional<VertexSet> win_condition_violating_set(const Graph& g, std::size_t k);

/// An S with c(G-S) > (k-1)|S|+1, searched for 1 <= |S| <= (n-2)/k. A tree
/// of maximum degree k loses at most (k-1)|S|+1 pieces when S is removed, so
/// such an S rules out a spanning k-tree. Absence is inconclusive.
std::optional<VertexSet> ktree_necessary_violating_set(const Graph& g, std::size_t k);

struct SpanningTree {
  std::vector<Edge> edges;
  std::size_t max_degree = 0;
  /// Vertices still marked at the local optimum; removing them splits G into
  /// enough pieces that no spanning tree has maximum degree below
  /// max_degree - 1.
  VertexSet witness;
};

/// Local-search spanning tree whose maximum degree is at most one above the
/// optimum (Furer-Raghavachari improvement rule with cascading swaps).
/// Requires G connected.
SpanningTree min_degree_spanning_tree(const Graph& g);

struct ExactTreeResult {
  KTreeStatus status = KTreeStatus::unknown;
  std::optional<std::vector<Edge>> tree_edges;
  std::size_t nodes = 0;
};

/// Branch and bound over degree-bounded spanning trees grown from vertex 0.
/// Returns unknown once more than `budget` nodes were expanded.
ExactTreeResult exact_spanning_ktree(const Graph& g, std::size_t k, std::size_t budget = kDefaultKTreeBudget);

/// Decision pipeline: local-search tree, necessary cut condition, Win's
/// condition, local-search lower bound, then exact search.
KTreeDecision has_spanning_ktree(const Graph& g, std::size_t k, std::size_t budget = kDefaultKTreeBudget);

/// Runs a single method (or the pipeline for KTreeMethod::automatic).
KTreeDecision decide_spanning_ktree(const Graph& g, std::size_t k, KTreeMethod method,
                                    std::size_t budget = kDefaultKTreeBudget);

bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges);
std::size_t tree_max_degree(std::size_t n, const std::vector<Edge>& edges);

}  // namespace spectra
