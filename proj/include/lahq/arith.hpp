#pragma once

// Exact arithmetic kernels: big integers and rationals (GMP), sparse Laurent
// polynomials in one formal variable, and truncated power series.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lahq/errors.hpp"

namespace lahq {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

std::string to_string(const ExactInt& value);
/// `num` for integers, `num/den` otherwise.
std::string to_string(const ExactRat& value);

ExactInt int_pow(const ExactInt& base, std::uint64_t exponent);

/// Sparse Laurent polynomial with rational coefficients.
///
/// The term map never stores a zero coefficient, so two polynomials are equal
/// exactly when their term maps are equal. The variable is usually q, but the
/// same type serves as a dense-enough polynomial ring in t for the classical
/// generating-function checks; only the rendering differs.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, ExactRat>;

  LaurentPoly() = default;
  LaurentPoly(long constant);                // NOLINT(google-explicit-constructor)
  LaurentPoly(const ExactInt& constant);     // NOLINT(google-explicit-constructor)
  LaurentPoly(const ExactRat& constant);     // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const ExactRat& coefficient, Exponent exponent);
  /// q^exponent
  static LaurentPoly power(Exponent exponent);
  /// Sums the given terms; repeated exponents accumulate.
  static LaurentPoly from_terms(
      std::initializer_list<std::pair<Exponent, ExactRat>> terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Both require a nonzero polynomial.
  Exponent low_exponent() const;
  Exponent high_exponent() const;

  ExactRat coefficient(Exponent exponent) const;

  /// Multiplies by q^shift.
  LaurentPoly shifted(Exponent shift) const;
  /// Substitutes q -> q^factor (factor may be negative).
  LaurentPoly substitute_power(Exponent factor) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const ExactRat& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const ExactRat& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const ExactRat& lhs, LaurentPoly rhs) { return rhs *= lhs; }
  friend LaurentPoly operator*(LaurentPoly lhs, const ExactInt& rhs) { return lhs *= ExactRat(rhs); }
  friend LaurentPoly operator*(const ExactInt& lhs, LaurentPoly rhs) { return rhs *= ExactRat(lhs); }
  friend LaurentPoly operator*(LaurentPoly lhs, long rhs) { return lhs *= ExactRat(rhs); }
  friend LaurentPoly operator*(long lhs, LaurentPoly rhs) { return rhs *= ExactRat(lhs); }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// Canonical text form: ascending exponents, `C*q^E` terms with the usual
  /// elisions, "0" for the zero polynomial.
  std::string to_string(std::string_view variable = "q") const;

 private:
  void add_term(Exponent exponent, const ExactRat& coefficient);

  TermMap terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Returns c with a = b * c. Throws DivisionByZero if b = 0 and
/// NonExactDivision if the long division leaves a nonzero remainder.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Substitutes q := 1.
ExactRat lp_eval_q1(const LaurentPoly& a);

LaurentPoly lp_pow(const LaurentPoly& base, std::uint64_t exponent);

/// Inverse of a ring unit: a nonzero rational, or a nonzero Laurent monomial.
ExactRat invert_unit(const ExactRat& value);
LaurentPoly invert_unit(const LaurentPoly& value);

/// Truncated power series sum_{i<=N} c_i t^i over ExactRat or LaurentPoly.
///
/// Arithmetic is exact modulo t^(N+1). Combining two series of different
/// orders yields a series of the smaller order.
template <class Coef>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1, Coef(0)) {}
  TruncSeries(std::size_t order, std::vector<Coef> coeffs)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Coef(0));
  }

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = Coef(1);
    return s;
  }
  /// c * t^power
  static TruncSeries term(std::size_t order, const Coef& c, std::size_t power) {
    TruncSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Coef>& coeffs() const { return coeffs_; }
  const Coef& operator[](std::size_t i) const { return coeffs_.at(i); }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    truncate_to(rhs.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& rhs) {
    truncate_to(rhs.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  TruncSeries& operator*=(const Coef& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  friend TruncSeries operator*(TruncSeries lhs, const Coef& rhs) { return lhs *= rhs; }
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
    const std::size_t n = std::min(lhs.order(), rhs.order());
    TruncSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (lhs.coeffs_[i] == Coef(0)) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncSeries& lhs, const TruncSeries& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void truncate_to(std::size_t order) {
    if (order < this->order()) coeffs_.resize(order + 1);
  }

  std::vector<Coef> coeffs_;
};

template <class Coef>
TruncSeries<Coef> ts_inverse(const TruncSeries<Coef>& s) {
  const Coef c0_inv = invert_unit(s[0]);
  const std::size_t n = s.order();
  std::vector<Coef> g(n + 1, Coef(0));
  g[0] = c0_inv;
  for (std::size_t m = 1; m <= n; ++m) {
    Coef acc(0);
    for (std::size_t i = 1; i <= m; ++i) acc += s[i] * g[m - i];
    g[m] = -(c0_inv * acc);
  }
  return TruncSeries<Coef>(n, std::move(g));
}

template <class Coef>
TruncSeries<Coef> ts_pow(const TruncSeries<Coef>& s, std::uint64_t k) {
  auto result = TruncSeries<Coef>::one(s.order());
  auto base = s;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace lahq
