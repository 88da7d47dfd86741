#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spectra {

namespace {

struct PowerOutcome {
  double rho = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Power iteration on (A + I) restricted to one connected component.
PowerOutcome component_radius(const std::vector<std::vector<std::size_t>>& nbrs, double tol,
                              std::size_t cap) {
  const std::size_t m = nbrs.size();
  PowerOutcome out;
  if (m == 1) {
    out.converged = true;
    return out;
  }
  std::vector<double> x(m), y(m);
  double norm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = 1.0 + static_cast<double>(nbrs[i].size());
    norm += x[i] * x[i];
  }
  norm = std::sqrt(norm);
  for (double& v : x) v /= norm;

  for (std::size_t it = 1; it <= cap; ++it) {
    double theta = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (std::size_t j : nbrs[i]) acc += x[j];
      y[i] = acc;
      theta += acc * x[i];
    }
    double res2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = y[i] - theta * x[i];
      res2 += d * d;
    }
    out.rho = theta;
    out.iterations = it;
    out.residual = std::sqrt(res2);
    if (out.residual <= tol) {
      out.converged = true;
      return out;
    }
    norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
  }
  return out;
}

bool is_irreducible(const QuotientMatrix& q) {
  const std::size_t r = q.size();
  for (int direction = 0; direction < 2; ++direction) {
    std::vector<bool> seen(r, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t w = direction == 0 ? q.at(i, j) : q.at(j, i);
        if (w > 0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

int sign_of(double v) { return (v > 0) - (v < 0); }

double bisect(const Polynomial& p, double lo, double hi, double tol) {
  const int s_lo = sign_of(p.evaluate(lo));
  if (s_lo == 0) return lo;
  if (sign_of(p.evaluate(hi)) == 0) return hi;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int s_mid = sign_of(p.evaluate(mid));
    if (s_mid == 0) return mid;
    if (s_mid == s_lo) lo = mid;
    else hi = mid;
  }
  return lo + (hi - lo) / 2;
}

double coefficient_bound(const Polynomial& p) {
  double sum = 0.0;
  for (double c : p.coefficients()) sum += std::abs(c);
  return 2.0 * sum / std::abs(p.leading());
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, std::size_t max_iterations) {
  if (g.order() == 0) throw UsageError("spectral radius needs at least one vertex");
  if (!(tol > 0)) throw UsageError("spectral tolerance must be positive");

  SpectralResult result;
  bool have = false;
  double worst_residual = 0.0;
  double best_estimate = 0.0;
  bool failed = false;
  for (const VertexSet& comp : components(g)) {
    const auto members = comp.to_vector();
    std::vector<std::size_t> local(g.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
    std::vector<std::vector<std::size_t>> nbrs(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      g.neighbors(members[i]).for_each([&](Vertex u) { nbrs[i].push_back(local[u]); });
    }
    const PowerOutcome out = component_radius(nbrs, tol, max_iterations);
    result.iterations += out.iterations;
    if (!out.converged) {
      failed = true;
      worst_residual = std::max(worst_residual, out.residual);
      best_estimate = std::max(best_estimate, out.rho);
      continue;
    }
    if (!have || out.rho > result.rho) {
      result.rho = out.rho;
      result.residual = out.residual;
      have = true;
    }
  }
  if (failed) {
    throw ConvergenceError("power iteration did not converge within " + std::to_string(max_iterations) +
                               " iterations",
                           std::max(best_estimate, result.rho), worst_residual);
  }
  return result;
}

double hong_bound(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw UsageError("Hong's bound assumes no isolated vertices; vertex " + std::to_string(v) +
                       " is isolated");
    }
  }
  const long long radicand = 2 * static_cast<long long>(g.edge_count()) - static_cast<long long>(g.order()) + 1;
  if (radicand < 0) throw DomainError("2e(G) - n + 1 is negative");
  return std::sqrt(static_cast<double>(radicand));
}

QuotientMatrix::QuotientMatrix(std::size_t r, std::vector<std::int64_t> entries)
    : r_(r), entries_(std::move(entries)) {
  if (entries_.size() != r_ * r_) throw UsageError("quotient matrix entry count does not match r*r");
}

NonEquitableError::NonEquitableError(std::size_t block_i, std::size_t block_j, Vertex u, Vertex v,
                                     std::size_t count_u, std::size_t count_v)
    : UsageError("partition is not equitable: block " + std::to_string(block_i) + " -> block " +
                 std::to_string(block_j) + " row sums differ (vertex " + std::to_string(u) + " has " +
                 std::to_string(count_u) + ", vertex " + std::to_string(v) + " has " +
                 std::to_string(count_v) + ")"),
      block_i_(block_i), block_j_(block_j), u_(u), v_(v) {}

namespace {

// Either returns the quotient or throws NonEquitableError.
QuotientMatrix build_quotient(const Graph& g, const Partition& pi) {
  validate_partition(g.order(), pi);
  const std::size_t r = pi.block_count();
  std::vector<std::int64_t> entries(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const Vertex first = pi.blocks[i].first();
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t expected = (g.neighbors(first) & pi.blocks[j]).count();
      pi.blocks[i].for_each([&](Vertex v) {
        const std::size_t got = (g.neighbors(v) & pi.blocks[j]).count();
        if (got != expected) throw NonEquitableError(i, j, first, v, expected, got);
      });
      entries[i * r + j] = static_cast<std::int64_t>(expected);
    }
  }
  return QuotientMatrix(r, std::move(entries));
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& pi) {
  try {
    build_quotient(g, pi);
    return true;
  } catch (const NonEquitableError&) {
    return false;
  }
}

QuotientMatrix quotient(const Graph& g, const Partition& pi) { return build_quotient(g, pi); }

double quotient_largest_eigenvalue(const QuotientMatrix& q, double tol) {
  const std::size_t r = q.size();
  if (r == 0) throw UsageError("empty quotient matrix");
  for (std::int64_t v : q.entries()) {
    if (v < 0) throw UsageError("quotient matrix has a negative entry");
  }
  if (r == 1) return static_cast<double>(q.at(0, 0));
  if (!is_irreducible(q)) {
    throw UsageError("quotient matrix is reducible; pass the quotient of a connected graph");
  }

  std::vector<double> x(r, 1.0), y(r);
  double lo = 0.0, hi = 0.0;
  for (std::size_t it = 0; it < kDefaultIterationCap; ++it) {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t i = 0; i < r; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < r; ++j) acc += static_cast<double>(q.at(i, j)) * x[j];
      y[i] = acc;
      lo = std::min(lo, acc / x[i]);
      hi = std::max(hi, acc / x[i]);
    }
    if (hi - lo <= tol) return lo + (hi - lo) / 2;
    double norm = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      y[i] += x[i];
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < r; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("quotient power iteration did not converge", lo + (hi - lo) / 2, hi - lo);
}

IntPolynomial characteristic_polynomial(const QuotientMatrix& q) {
  const std::size_t r = q.size();
  // coeff[k] holds the coefficient of x^k.
  std::vector<std::int64_t> coeff(r + 1, 0);
  coeff[r] = 1;
  std::vector<std::int64_t> m(r * r, 0);
  for (std::size_t k = 1; k <= r; ++k) {
    // M_k = Q M_{k-1} + c_{r-k+1} I
    std::vector<std::int64_t> next(r * r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        std::int64_t acc = 0;
        for (std::size_t l = 0; l < r; ++l) acc = checked_add(acc, checked_mul(q.at(i, l), m[l * r + j]));
        next[i * r + j] = acc;
      }
      next[i * r + i] = checked_add(next[i * r + i], coeff[r - k + 1]);
    }
    m = std::move(next);
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < r; ++l) trace = checked_add(trace, checked_mul(q.at(i, l), m[l * r + i]));
    }
    const auto kk = static_cast<std::int64_t>(k);
    if (trace % kk != 0) throw DomainError("characteristic polynomial coefficient is not integral");
    coeff[r - k] = -trace / kk;
  }
  return IntPolynomial(std::move(coeff));
}

IntPolynomial charpoly_b2_exact(std::int64_t n, std::int64_t b, std::int64_t s) {
  const std::int64_t c3 = -n + b * s + 3;
  const std::int64_t c2 = n - b * s * s - (b + 3) * s - 6;
  const std::int64_t c1 = b * s * s * n + 3 * s * n + 2 * n - b * (b + 1) * s * s * s -
                          (5 * b + 3) * s * s - (2 * b + 12) * s - 8;
  const std::int64_t c0 = -2 * b * s * s * n + 2 * b * (b + 1) * s * s * s + 8 * b * s * s;
  return IntPolynomial({c0, c1, c2, c3, 1});
}

Polynomial charpoly_b2(std::int64_t n, std::int64_t b, std::int64_t s) {
  return charpoly_b2_exact(n, b, s).cast<double>();
}

IntPolynomial charpoly_bstar_exact(std::int64_t n, std::int64_t b) {
  return IntPolynomial({-2 * b * n + 2 * b * b + 10 * b, b * n + 5 * n - b * b - 8 * b - 23,
                        n - 2 * b - 9, -n + b + 3, 1});
}

std::vector<double> real_roots(const Polynomial& p, double tol) {
  if (p.degree() <= 0) return {};
  if (p.degree() == 1) return {-p.coefficient(0) / p.coefficient(1)};

  const double bound = coefficient_bound(p);
  std::vector<double> breaks{-bound};
  for (double c : real_roots(p.derivative(), tol)) {
    if (c > breaks.back() && c < bound) breaks.push_back(c);
  }
  breaks.push_back(bound);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const int sa = sign_of(p.evaluate(a)), sb = sign_of(p.evaluate(b));
    if (sa == 0) {
      if (roots.empty() || a - roots.back() > tol) roots.push_back(a);
    } else if (sb != 0 && sa != sb) {
      roots.push_back(bisect(p, a, b, tol));
    }
  }
  if (sign_of(p.evaluate(breaks.back())) == 0) roots.push_back(breaks.back());
  return roots;
}

double largest_real_root(const Polynomial& p, double bracket_lo, double tol) {
  if (p.degree() < 1) throw DomainError("polynomial has no roots to bracket");
  const int lead = sign_of(p.leading());
  const double bound = coefficient_bound(p);

  // Past the last turning point p is monotone, so at most one root lies there.
  double start = bracket_lo;
  if (p.degree() >= 2) {
    const auto turning = real_roots(p.derivative(), tol);
    if (!turning.empty()) start = std::max(start, turning.back());
  }

  const int s_start = sign_of(p.evaluate(start));
  if (s_start == 0) return start;
  if (s_start == lead) {
    // No root beyond `start`; anything left lies in [bracket_lo, start).
    const auto roots = real_roots(p, tol);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
      if (*it >= bracket_lo) return *it;
    }
    throw DomainError("no real root at or above " + std::to_string(bracket_lo));
  }

  double lo = start;
  double step = 1.0;
  double hi = start + step;
  while (sign_of(p.evaluate(hi)) != lead && sign_of(p.evaluate(hi)) != 0) {
    lo = hi;
    step *= 2;
    hi = start + step;
    if (hi - start > bound + std::abs(start)) {
      throw DomainError("no sign change found within the coefficient bound");
    }
  }
  return bisect(p, lo, hi, tol);
}

}  // namespace spectra
