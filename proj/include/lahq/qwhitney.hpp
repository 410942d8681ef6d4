#pragma once

// Translated q-Whitney numbers of the first, second and third kind, the
// Garsia-Remmel q-Lah numbers, and translated q-Dowling numbers.

#include <cstdint>
#include <memory>

#include "lahq/arith.hpp"
#include "lahq/triangle.hpp"

namespace lahq {

enum class QFamily { qw1, qw2, qwl, qlah_gr };

using QTriangle = Triangle<QFamily, LaurentPoly>;

/// qw1/qw2 accept any nonzero alpha; qwl requires alpha >= 1 and qlah_gr
/// ignores alpha (it is qwl at alpha = 1).
QTriangle q_triangle(QFamily family, std::int64_t alpha, std::int64_t n_max);

std::shared_ptr<const QTriangle> q_table(QFamily family, std::int64_t alpha, std::int64_t n_max);

/// w^1_(alpha)[n,k]_q: coefficients of [t]_q^k in [t|alpha]_n.
LaurentPoly qw1(std::int64_t alpha, std::int64_t n, std::int64_t k);
/// w^2_(alpha)[n,k]_q: coefficients of [t|alpha]_k in [t]_q^n.
LaurentPoly qw2(std::int64_t alpha, std::int64_t n, std::int64_t k);
/// L_(alpha)[n,k]_q: coefficients of [t|alpha]_k in [t|-alpha]_n.
LaurentPoly qwl(std::int64_t alpha, std::int64_t n, std::int64_t k);
/// Same numbers through the alternating q-binomial sum, divided exactly by
/// [k]_{q^alpha}! [alpha]_q^k.
LaurentPoly qwl_explicit(std::int64_t alpha, std::int64_t n, std::int64_t k);

enum class QLahRoute { recurrence, explicit_formula };

/// Garsia-Remmel q-Lah numbers. The explicit route needs 1 <= k <= n
/// (InvalidRange otherwise).
LaurentPoly qlah_gr(std::int64_t n, std::int64_t k, QLahRoute route = QLahRoute::recurrence);

/// sum_k w^2_(alpha)[n,k]_q
LaurentPoly qdowling(std::int64_t alpha, std::int64_t n);

/// sum_j (sum_{k<=j} L_(alpha)[j,k]_q) w^2_(-alpha)[n,j]_q
LaurentPoly qdowling_qi(std::int64_t alpha, std::int64_t n);

/// sum_j (-1)^{k-j} q^{alpha C(k-j,2)} C(k,j)_{q^alpha} prod_{m<j} (1 - q^{alpha m}[alpha]_q t)^-1
/// modulo t^(order+1). This is [k]_{q^alpha}! [alpha]_q^k times the generating
/// function sum_n L_(alpha)[n,k]_q t^n / [n]_{q^alpha}!.
TruncSeries<LaurentPoly> qwl_egf_series_scaled(std::int64_t alpha, std::int64_t k,
                                               std::size_t order);

/// [t|alpha]_n = prod_{i<n} [t - i alpha]_q at an integer point t.
LaurentPoly q_generalized_factorial_at(std::int64_t t, std::int64_t alpha, std::int64_t n);

}  // namespace lahq
