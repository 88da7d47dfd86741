#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

namespace detail {

template <typename T>
T poly_add(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) return checked_add(a, b);
  else return a + b;
}

template <typename T>
T poly_mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) return checked_mul(a, b);
  else return a * b;
}

}  // namespace detail

/// Univariate polynomial with coefficients c_0..c_d, stored low degree first.
/// Leading zeros are trimmed, so the zero polynomial has no coefficients and
/// degree -1.
template <typename T>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

  static BasicPolynomial monomial(std::size_t degree, T coefficient = T{1}) {
    std::vector<T> c(degree + 1, T{});
    c[degree] = coefficient;
    return BasicPolynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  T leading() const { return c_.empty() ? T{} : c_.back(); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  BasicPolynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(detail::poly_mul(c_[i], static_cast<T>(i)));
    return BasicPolynomial(std::move(d));
  }

  template <typename U>
  BasicPolynomial<U> cast() const {
    std::vector<U> out;
    for (const T& v : c_) out.push_back(static_cast<U>(v));
    return BasicPolynomial<U>(std::move(out));
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::poly_add(a.coefficient(i), b.coefficient(i));
    return BasicPolynomial(std::move(out));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a + b * T{-1};
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const T& scalar) {
    std::vector<T> out = a.c_;
    for (T& v : out) v = detail::poly_mul(v, scalar);
    return BasicPolynomial(std::move(out));
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] = detail::poly_add(out[i + j], detail::poly_mul(a.c_[i], b.c_[j]));
      }
    }
    return BasicPolynomial(std::move(out));
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  /// e.g. "x^4 - 8x^3 - x^2 + 56x - 36".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    out.precision(12);
    for (int i = degree(); i >= 0; --i) {
      const T v = c_[static_cast<std::size_t>(i)];
      if (v == T{}) continue;
      const bool negative = v < T{};
      const T mag = negative ? -v : v;
      if (i == degree()) out << (negative ? "-" : "");
      else out << (negative ? " - " : " + ");
      if (mag != T{1} || i == 0) out << mag;
      if (i >= 1) out << 'x';
      if (i >= 2) out << '^' << i;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using Polynomial = BasicPolynomial<double>;
using IntPolynomial = BasicPolynomial<std::int64_t>;

}  // namespace spectra
