#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/partition.hpp"

namespace spectra {

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,t} with centre 0.
Graph star_graph(std::size_t t);

/// K_s joined to the disjoint union of cliques K_{parts[0]}, K_{parts[1]}, ...
/// Vertices 0..s-1 form the K_s block; parts follow in the given order.
Graph clique_join(std::size_t s, const std::vector<std::size_t>& parts);

/// The partition {K_s block, part 0, part 1, ...} of clique_join(s, parts).
Partition clique_join_partition(std::size_t s, const std::vector<std::size_t>& parts);

// Named families. Each validates its parameters and throws UsageError naming
// the violated inequality. The join vertex (or K_s block) sits at 0..s-1.

/// K_1 v (K_{n-b-4} u K_3 u bK_1).
Graph extremal_odd_factor(std::size_t n, std::size_t b);
/// K_1 v (K_{n-k-3} u 2K_2 u (k-2)K_1).
Graph extremal_ktree(std::size_t n, std::size_t k);
/// K_s v (K_{n-(b+1)s-3} u K_3 u bsK_1), needs n >= (b+1)s+6.
Graph g2_odd_factor(std::size_t n, std::size_t b, std::size_t s);
/// K_s v (K_{n-(k-1)s-4} u 2K_2 u (k-2)sK_1), needs n >= (k-1)s+6.
Graph g2_ktree(std::size_t n, std::size_t k, std::size_t s);
/// K_1 v (K_{n-3b-2} u bK_3 u K_1).
Graph comparison_graph_thm11(std::size_t n, std::size_t b);
/// K_1 v (K_{n-2k} u (k-1)K_2 u K_1).
Graph comparison_graph_thm13(std::size_t n, std::size_t k);

/// Four-block equitable partitions {K_s, big clique, small cliques, isolated
/// part} of the families above. These are the partitions whose quotients are
/// B_2 (odd factor) and its spanning-tree analogue.
Partition g2_odd_factor_partition(std::size_t n, std::size_t b, std::size_t s);
Partition g2_ktree_partition(std::size_t n, std::size_t k, std::size_t s);
Partition extremal_odd_factor_partition(std::size_t n, std::size_t b);
Partition extremal_ktree_partition(std::size_t n, std::size_t k);

/// Part sizes (excluding the K_s block) used by each named family.
std::vector<std::size_t> extremal_odd_factor_parts(std::size_t n, std::size_t b);
std::vector<std::size_t> extremal_ktree_parts(std::size_t n, std::size_t k);
std::vector<std::size_t> g2_odd_factor_parts(std::size_t n, std::size_t b, std::size_t s);
std::vector<std::size_t> g2_ktree_parts(std::size_t n, std::size_t k, std::size_t s);

/// CLI-facing family selector.
struct FamilyRequest {
  std::string name;  ///< odd-extremal | ktree-extremal | g2-odd | g2-ktree | thm11 | thm13 | clique-join
  std::optional<std::size_t> n, b, k, s;
  std::vector<std::size_t> parts;
};

Graph build_family(const FamilyRequest& request);

const std::vector<std::string>& family_names();

}  // namespace spectra
