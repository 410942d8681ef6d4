#pragma once

// q-integers, q-factorials, q-binomials and q-falling factorials, all as
// Laurent polynomials in q.

#include <cstdint>

#include "lahq/arith.hpp"

namespace lahq {

/// Base multiplier a for the substitution q -> q^a, as in [n]_{q^a}.
class QBase {
 public:
  explicit QBase(std::int64_t a = 1);
  std::int64_t value() const { return a_; }

 private:
  std::int64_t a_;
};

/// [n]_{q^a} = 1 + q^a + ... + q^{(n-1)a}; [0] = 0. Requires n >= 0.
LaurentPoly qint(std::int64_t n, QBase base = QBase{});

/// [m]_{q^a} for any integer m, using [-m] = -q^{-ma}[m] for m < 0.
LaurentPoly qint_signed(std::int64_t m, QBase base = QBase{});

/// [n]_{q^a}! ; [0]! = 1.
LaurentPoly qfact(std::int64_t n, QBase base = QBase{});

/// Gaussian binomial [n k]_{q^a}, computed as a quotient of q-factorials.
/// 0 unless 0 <= k <= n.
LaurentPoly qbinom(std::int64_t n, std::int64_t k, QBase base = QBase{});

/// [n]_{q^a,k} = [n][n-1]...[n-k+1]. Throws InvalidOrder if k > n.
LaurentPoly qfalling(std::int64_t n, std::int64_t k, QBase base = QBase{});

enum class Increment {
  negative,  ///< [aj | -a]_n = prod_{i<n} [a(j+i)]_q
  positive,  ///< [aj | a]_n  = prod_{i<n} [a(j-i)]_q
};

/// Generalized q-factorial [t|+-alpha]_n at t = alpha*j.
///
/// The positive increment refuses to evaluate q-integers of negative
/// arguments (NegativeArgument); callers apply the reflection explicitly.
LaurentPoly gqf_at(std::int64_t j, std::int64_t alpha, Increment sign, std::int64_t n);

}  // namespace lahq
