#pragma once

#include <cstddef>
#include <vector>

#include "spectra/vertex_set.hpp"

namespace spectra {

/// Ordered vertex partition; blocks are disjoint, nonempty and cover 0..n-1.
struct Partition {
  std::vector<VertexSet> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
};

/// Throws UsageError naming the first broken partition property.
void validate_partition(std::size_t n, const Partition& pi);

/// Each vertex in its own block, in vertex order.
Partition singleton_partition(std::size_t n);

}  // namespace spectra
