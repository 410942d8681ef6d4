#include "lahq/arith.hpp"

#include <algorithm>

namespace lahq {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactInt& value) { return value.get_str(); }

std::string to_string(const ExactRat& value) {
  // mpq renders integers without the "/1".
  return value.get_str();
}

ExactInt int_pow(const ExactInt& base, std::uint64_t exponent) {
  ExactInt result = 1;
  ExactInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, ExactRat(constant));
}

LaurentPoly::LaurentPoly(const ExactInt& constant) {
  if (constant != 0) terms_.emplace(0, ExactRat(constant));
}

LaurentPoly::LaurentPoly(const ExactRat& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const ExactRat& coefficient, Exponent exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::power(Exponent exponent) {
  return monomial(ExactRat(1), exponent);
}

LaurentPoly LaurentPoly::from_terms(
    std::initializer_list<std::pair<Exponent, ExactRat>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPoly::Exponent LaurentPoly::low_exponent() const {
  if (terms_.empty()) throw InvalidRange("low_exponent of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::high_exponent() const {
  if (terms_.empty()) throw InvalidRange("high_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

ExactRat LaurentPoly::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ExactRat(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  if (shift == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(Exponent factor) const {
  LaurentPoly out;
  if (factor == 0) {
    out = LaurentPoly(lp_eval_q1(*this));
    return out;
  }
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * factor, c);
  return out;
}

void LaurentPoly::add_term(Exponent exponent, const ExactRat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ExactRat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  // Dense accumulation over the exponent span keeps this a flat loop.
  const auto lo = lhs.low_exponent() + rhs.low_exponent();
  const auto hi = lhs.high_exponent() + rhs.high_exponent();
  std::vector<ExactRat> acc(static_cast<std::size_t>(hi - lo + 1));
  ExactRat prod;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      prod = ca * cb;
      acc[static_cast<std::size_t>(ea + eb - lo)] += prod;
    }
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) {
      out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<LaurentPoly::Exponent>(i),
                              std::move(acc[i]));
    }
  }
  return out;
}

std::string LaurentPoly::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const ExactRat magnitude = abs(c);
    std::string body;
    if (e == 0) {
      body = lahq::to_string(magnitude);
    } else {
      std::string var(variable);
      if (e != 1) var += "^" + std::to_string(e);
      body = magnitude == 1 ? var : lahq::to_string(magnitude) + "*" + var;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("lp_div_exact by the zero polynomial");
  if (a.is_zero()) return {};

  // Normalize the divisor so that its lowest exponent is 0, then peel off
  // quotient terms from the lowest exponent of the remainder upwards.
  const auto shift = b.low_exponent();
  const LaurentPoly divisor = b.shifted(-shift);
  const ExactRat lead_inv = 1 / divisor.terms().begin()->second;
  const auto quotient_high = a.high_exponent() - divisor.high_exponent();

  LaurentPoly quotient;
  LaurentPoly remainder = a;
  while (!remainder.is_zero() && remainder.low_exponent() <= quotient_high) {
    const auto& [e, c] = *remainder.terms().begin();
    const LaurentPoly term = LaurentPoly::monomial(c * lead_inv, e);
    remainder -= term * divisor;
    quotient += term;
  }
  if (!remainder.is_zero()) {
    throw NonExactDivision("(" + a.to_string() + ") / (" + b.to_string() +
                           ") leaves remainder " + remainder.to_string());
  }
  return quotient.shifted(-shift);
}

ExactRat lp_eval_q1(const LaurentPoly& a) {
  ExactRat sum = 0;
  for (const auto& [e, c] : a.terms()) sum += c;
  return sum;
}

LaurentPoly lp_pow(const LaurentPoly& base, std::uint64_t exponent) {
  LaurentPoly result(1L);
  LaurentPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

ExactRat invert_unit(const ExactRat& value) {
  if (value == 0) throw NonInvertibleConstantTerm("constant term is 0");
  return 1 / value;
}

LaurentPoly invert_unit(const LaurentPoly& value) {
  if (!value.is_monomial()) {
    throw NonInvertibleConstantTerm("constant term " + value.to_string() +
                                    " is not a Laurent monomial");
  }
  const auto& [e, c] = *value.terms().begin();
  return LaurentPoly::monomial(1 / c, -e);
}

}  // namespace lahq
