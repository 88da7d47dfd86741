#pragma once

#include <cstddef>
#include <optional>

#include "spectra/graph.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// Exhaustive binding-number search is refused above this order unless forced.
inline constexpr std::size_t kExhaustiveBindingLimit = 24;

struct BindingResult {
  /// |N(witness)| / |witness|; meaningless when !feasible.
  Rational value;
  VertexSet witness;
  /// False when no nonempty X has N(X) != V(G).
  bool feasible = false;
  std::size_t nodes = 0;
};

/// Exact bind(G) = min |N(X)|/|X| over nonempty X with N(X) != V(G).
///
/// Every admissible X avoids the neighbourhood of some vertex z outside N(X),
/// so the search runs over subsets of V - N(z) for each z, by increasing
/// size, extending neighbourhoods incrementally and pruning any prefix whose
/// neighbourhood already rules out beating the incumbent. The witness is the
/// first minimiser of least size. Throws CapabilityError for
/// n > kExhaustiveBindingLimit unless `force`.
BindingResult binding_number(const Graph& g, bool force = false);

struct RBindingResult {
  bool holds = true;
  /// Some admissible X with |N(X)| < r|X|, when !holds.
  std::optional<VertexSet> violating_set;
  std::size_t nodes = 0;
};

/// Decides bind(G) >= r with the same enumeration, stopping at the first
/// violating set. Requires r > 0.
RBindingResult is_r_binding(const Graph& g, const Rational& r);

}  // namespace spectra
