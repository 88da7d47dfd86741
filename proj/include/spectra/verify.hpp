#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectra/polynomial.hpp"
#include "json.hpp"

namespace spectra {

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json witness = nlohmann::json::object();
};

struct VerificationReport {
  std::string theorem_id;
  /// Parameter tuples, each an object with some of n, b, k, s.
  std::vector<nlohmann::json> grid;
  std::vector<Check> checks;
  std::uint64_t rng_seed = 0;
  std::int64_t runtime_ms = 0;
  std::vector<std::string> notes;

  bool all_passed() const;
  void add(std::string name, bool passed, nlohmann::json witness = nlohmann::json::object());
  /// Appends the grid, checks and notes of `other`.
  void absorb(VerificationReport other);
  nlohmann::json to_json() const;
};

/// Worker count for verify fan-out: SPECTRA_THREADS if set, else the
/// hardware concurrency.
std::size_t worker_count();

// The polynomials of the odd-factor and spanning-tree proofs, with exact
// integer coefficients.

/// f(x) with parameters (n, b, s).
IntPolynomial ineq_f(std::int64_t n, std::int64_t b, std::int64_t s);
/// g(n) with parameters (b, s), as a polynomial in n.
IntPolynomial ineq_g(std::int64_t b, std::int64_t s);
/// h(s) with parameter b, as a polynomial in s.
IntPolynomial ineq_h(std::int64_t b);
/// phi(s) = k(k-2)s^2 + (9k-10-2(k-2)n)s + n^2-10n+25, as a polynomial in s.
IntPolynomial ineq_phi(std::int64_t n, std::int64_t k);

struct InequalityFns {
  IntPolynomial f, g, h, phi_s;
};
InequalityFns inequality_functions(std::int64_t n, std::int64_t b, std::int64_t k, std::int64_t s);

/// Checks on K_1 v (K_{n-b-4} u K_3 u bK_1): connected, bind = 1/b, no odd
/// [1,b]-factor with witness {0}, rho agrees with the quotient polynomial's
/// largest root, rho > n-b-4. Requires b odd, n even, n >= max(12, 2b+8).
VerificationReport verify_sharpness_odd_factor(std::size_t n, std::size_t b);

/// Checks on K_1 v (K_{n-k-3} u 2K_2 u (k-2)K_1): connected, bind = 1/(k-2),
/// no spanning k-tree, rho > n-k-3, the 4-block quotient reproduces rho.
/// With `exact_cross_check` the branch and bound search must agree.
/// Requires k >= 3, n >= 2k+22.
VerificationReport verify_sharpness_ktree(std::size_t n, std::size_t k, bool exact_cross_check = false,
                                          std::size_t budget = 10'000'000);

enum class ImplicationTheorem { odd_factor, ktree };

/// Samples connected graphs (an edge-probability sweep plus perturbations of
/// the extremal graph, with the extremal graph and K_n injected) and checks
/// rho(G) >= rho(G*) and the binding hypothesis imply the factor or tree, or
/// G isomorphic to G*.
VerificationReport verify_implication(ImplicationTheorem theorem, std::size_t n, std::size_t param,
                                      std::size_t samples, std::uint64_t seed);

/// Both intro comparisons; either parameter may be absent.
VerificationReport verify_intro_comparisons(std::size_t n, std::optional<std::size_t> b,
                                            std::optional<std::size_t> k);

/// lemma is 25 or 26.
VerificationReport verify_lemma_25_26(int lemma, std::size_t trials, std::uint64_t seed);

struct ProofGrid {
  std::vector<std::int64_t> b_values{3, 5, 7, 9, 11, 13, 15};
  std::vector<std::int64_t> k_values{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  /// s = 1 is accepted and only runs the checks that make sense there.
  std::vector<std::int64_t> s_values{2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::int64_t odd_extent = 30;
  std::int64_t ktree_extent = 30;
  /// Include the power-iteration checks (quotient root vs rho, rho(G_2) < rho(G_*)).
  bool spectral = true;
};

VerificationReport verify_proof_inequalities(const ProofGrid& grid);

}  // namespace spectra
