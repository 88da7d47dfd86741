#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/graph.hpp"
#include "spectra/partition.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

inline constexpr double kDefaultSpectralTolerance = 1e-10;
inline constexpr std::size_t kDefaultIterationCap = 1'000'000;

struct SpectralResult {
  double rho = 0.0;
  std::size_t iterations = 0;
  /// ||Ax - theta x|| for the unit iterate of the dominant component.
  double residual = 0.0;
};

/// Largest adjacency eigenvalue, to absolute accuracy `tol`.
///
/// Runs power iteration on A + I separately for every component (the shift
/// makes each component's matrix primitive, so bipartite components converge
/// too) and stops once the Rayleigh-quotient residual drops below `tol`.
/// Throws ConvergenceError carrying the best estimate after `max_iterations`.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultSpectralTolerance,
                               std::size_t max_iterations = kDefaultIterationCap);

/// sqrt(2e(G) - n + 1). Requires no isolated vertices.
double hong_bound(const Graph& g);

/// Row-major r x r matrix of integer block row sums.
class QuotientMatrix {
 public:
  QuotientMatrix() = default;
  QuotientMatrix(std::size_t r, std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return r_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_.at(i * r_ + j); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<std::int64_t> entries_;
};

class NonEquitableError : public UsageError {
 public:
  NonEquitableError(std::size_t block_i, std::size_t block_j, Vertex u, Vertex v, std::size_t count_u,
                    std::size_t count_v);

  std::size_t block_i() const noexcept { return block_i_; }
  std::size_t block_j() const noexcept { return block_j_; }
  Vertex witness_u() const noexcept { return u_; }
  Vertex witness_v() const noexcept { return v_; }

 private:
  std::size_t block_i_, block_j_;
  Vertex u_, v_;
};

bool is_equitable(const Graph& g, const Partition& pi);

/// Quotient of A(G) under an equitable partition; throws NonEquitableError
/// naming the first block pair with unequal row sums and two witnesses.
QuotientMatrix quotient(const Graph& g, const Partition& pi);

/// Perron root of a nonnegative irreducible matrix via shifted power iteration,
/// stopped once the Collatz-Wielandt bounds are within `tol`.
double quotient_largest_eigenvalue(const QuotientMatrix& q, double tol = kDefaultSpectralTolerance);

/// det(xI - Q) expanded exactly (Faddeev-LeVerrier in integers).
IntPolynomial characteristic_polynomial(const QuotientMatrix& q);

/// Closed-form characteristic polynomial of the G_2 quotient B_2 for the odd
/// factor family K_s v (K_{n-(b+1)s-3} u K_3 u bsK_1).
IntPolynomial charpoly_b2_exact(std::int64_t n, std::int64_t b, std::int64_t s);
Polynomial charpoly_b2(std::int64_t n, std::int64_t b, std::int64_t s);

/// The same polynomial at s = 1, written out separately (B_* of the extremal graph).
IntPolynomial charpoly_bstar_exact(std::int64_t n, std::int64_t b);

/// All real roots, ascending, each to within `tol`.
std::vector<double> real_roots(const Polynomial& p, double tol = 1e-12);

/// Largest real root >= bracket_lo. Brackets upward from bracket_lo with a
/// doubling step past the last turning point, then bisects to `tol`. Throws
/// DomainError when no root at or above bracket_lo exists.
double largest_real_root(const Polynomial& p, double bracket_lo, double tol = 1e-12);

}  // namespace spectra
