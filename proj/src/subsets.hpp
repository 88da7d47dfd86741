#pragma once

#include <cstddef>
#include <vector>

#include "spectra/vertex_set.hpp"

namespace spectra::detail {

// Calls visit(S) on every `size`-subset of 0..n-1 in lexicographic order until
// visit returns true; reports whether it did.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  if (size > n) return false;
  std::vector<Vertex> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (visit(VertexSet(n, idx))) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace spectra::detail
