#include "lahq/qcalc.hpp"

#include <string>

namespace lahq {

QBase::QBase(std::int64_t a) : a_(a) {
  if (a < 1) throw InvalidRange("q-base multiplier must be >= 1, got " + std::to_string(a));
}

LaurentPoly qint(std::int64_t n, QBase base) {
  if (n < 0) throw NegativeArgument("qint(" + std::to_string(n) + ")");
  LaurentPoly out;
  for (std::int64_t i = 0; i < n; ++i) out += LaurentPoly::power(i * base.value());
  return out;
}

LaurentPoly qint_signed(std::int64_t m, QBase base) {
  if (m >= 0) return qint(m, base);
  return -qint(-m, base).shifted(m * base.value());
}

LaurentPoly qfact(std::int64_t n, QBase base) {
  if (n < 0) throw NegativeArgument("qfact(" + std::to_string(n) + ")");
  LaurentPoly out(1L);
  for (std::int64_t i = 2; i <= n; ++i) out *= qint(i, base);
  return out;
}

LaurentPoly qbinom(std::int64_t n, std::int64_t k, QBase base) {
  if (k < 0 || k > n) return {};
  const LaurentPoly denominator = qfact(k, base) * qfact(n - k, base);
  return lp_div_exact(qfact(n, base), denominator);
}

LaurentPoly qfalling(std::int64_t n, std::int64_t k, QBase base) {
  if (k < 0 || k > n) {
    throw InvalidOrder("qfalling order " + std::to_string(k) + " exceeds " + std::to_string(n));
  }
  LaurentPoly out(1L);
  for (std::int64_t i = 0; i < k; ++i) out *= qint(n - i, base);
  return out;
}

LaurentPoly gqf_at(std::int64_t j, std::int64_t alpha, Increment sign, std::int64_t n) {
  if (alpha < 1) throw InvalidAlpha("gqf_at requires alpha >= 1");
  if (j < 0 || n < 0) throw NegativeArgument("gqf_at requires j, n >= 0");
  LaurentPoly out(1L);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t m = sign == Increment::negative ? j + i : j - i;
    if (m < 0) {
      throw NegativeArgument("[" + std::to_string(alpha * m) +
                             "]_q in [alpha*j|alpha]_n; apply the reflection explicitly");
    }
    out *= qint(alpha * m);
  }
  return out;
}

}  // namespace lahq
