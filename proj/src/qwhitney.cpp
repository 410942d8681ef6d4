#include "lahq/qwhitney.hpp"

#include <string>

#include "lahq/qcalc.hpp"
#include "lahq/whitney.hpp"

namespace lahq {

namespace {

void require_nonzero_alpha(std::int64_t alpha) {
  if (alpha == 0) throw InvalidAlpha("alpha must be nonzero");
}

// Row n -> n+1 for each family. With [m]_q read through the reflection rule
// for negative m:
//
//   qw1: [t - n a] = q^{-na}([t] - [na])  gives
//        w1[n+1,k] = q^{-na} (w1[n,k-1] - [na] w1[n,k])
//   qw2: [t][t|a]_k = q^{ka}[t|a]_{k+1} + [ka][t|a]_k  gives
//        w2[n+1,k] = q^{(k-1)a} w2[n,k-1] + [ka] w2[n,k]
//   qwl: L[n+1,k] = q^{a(n+k-1)} L[n,k-1] + [a(n+k)] L[n,k]
LaurentPoly next_entry(QFamily family, std::int64_t a, std::int64_t n, std::int64_t k,
                       const LaurentPoly& left, const LaurentPoly& up) {
  switch (family) {
    case QFamily::qw1:
      return (left - qint_signed(n * a) * up).shifted(-n * a);
    case QFamily::qw2:
      return left.shifted((k - 1) * a) + qint_signed(k * a) * up;
    case QFamily::qwl:
    case QFamily::qlah_gr:
      return left.shifted(a * (n + k - 1)) + qint(a * (n + k)) * up;
  }
  return {};
}

}  // namespace

QTriangle q_triangle(QFamily family, std::int64_t alpha, std::int64_t n_max) {
  if (family == QFamily::qlah_gr) alpha = 1;
  require_nonzero_alpha(alpha);
  if (family == QFamily::qwl) require_positive_alpha(alpha);
  if (n_max < 0) throw InvalidRange("n_max must be >= 0");

  QTriangle t;
  t.family = family;
  t.alpha = alpha;
  t.rows.resize(static_cast<std::size_t>(n_max + 1));
  t.rows[0] = {LaurentPoly(1L)};
  for (std::int64_t n = 0; n < n_max; ++n) {
    auto& row = t.rows[static_cast<std::size_t>(n + 1)];
    row.resize(static_cast<std::size_t>(n + 2));
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      row[k] = next_entry(family, alpha, n, k, t.at(n, k - 1), t.at(n, k));
    }
  }
  return t;
}

namespace {

TriangleCache<QFamily, LaurentPoly>& cache() {
  static TriangleCache<QFamily, LaurentPoly> instance(&q_triangle);
  return instance;
}

LaurentPoly lookup(QFamily family, std::int64_t alpha, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  return q_table(family, alpha, n)->at(n, k);
}

}  // namespace

std::shared_ptr<const QTriangle> q_table(QFamily family, std::int64_t alpha, std::int64_t n_max) {
  if (family == QFamily::qlah_gr) alpha = 1;
  require_nonzero_alpha(alpha);
  if (family == QFamily::qwl) require_positive_alpha(alpha);
  return cache().get(family, alpha, n_max);
}

LaurentPoly qw1(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  require_nonzero_alpha(alpha);
  return lookup(QFamily::qw1, alpha, n, k);
}

LaurentPoly qw2(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  require_nonzero_alpha(alpha);
  return lookup(QFamily::qw2, alpha, n, k);
}

LaurentPoly qwl(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  require_positive_alpha(alpha);
  return lookup(QFamily::qwl, alpha, n, k);
}

LaurentPoly qwl_explicit(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  require_positive_alpha(alpha);
  if (n < 0 || k < 0 || k > n) return {};
  const QBase base(alpha);
  LaurentPoly sum;
  for (std::int64_t j = 0; j <= k; ++j) {
    LaurentPoly term = qbinom(k, j, base) * gqf_at(j, alpha, Increment::negative, n);
    term = term.shifted(alpha * (k - j) * (k - j - 1) / 2);
    if ((k - j) % 2 == 0) sum += term; else sum -= term;
  }
  const LaurentPoly denominator =
      qfact(k, base) * lp_pow(qint(alpha), static_cast<std::uint64_t>(k));
  return lp_div_exact(sum, denominator);
}

LaurentPoly qlah_gr(std::int64_t n, std::int64_t k, QLahRoute route) {
  if (route == QLahRoute::recurrence) return lookup(QFamily::qlah_gr, 1, n, k);
  if (k < 1 || k > n) {
    throw InvalidRange("explicit q-Lah formula needs 1 <= k <= n, got (" + std::to_string(n) +
                       "," + std::to_string(k) + ")");
  }
  const LaurentPoly ratio = lp_div_exact(qfact(n - 1), qfact(k - 1));
  return (qbinom(n, k) * ratio).shifted(k * (k - 1));
}

LaurentPoly qdowling(std::int64_t alpha, std::int64_t n) {
  require_positive_alpha(alpha);
  if (n < 0) return {};
  const auto table = q_table(QFamily::qw2, alpha, n);
  LaurentPoly sum;
  for (std::int64_t k = 0; k <= n; ++k) sum += table->at(n, k);
  return sum;
}

LaurentPoly qdowling_qi(std::int64_t alpha, std::int64_t n) {
  require_positive_alpha(alpha);
  if (n < 0) return {};
  const auto wl = q_table(QFamily::qwl, alpha, n);
  const auto w2_neg = q_table(QFamily::qw2, -alpha, n);
  LaurentPoly sum;
  for (std::int64_t j = 0; j <= n; ++j) {
    LaurentPoly row_sum;
    for (std::int64_t k = 0; k <= j; ++k) row_sum += wl->at(j, k);
    sum += row_sum * w2_neg->at(n, j);
  }
  return sum;
}

LaurentPoly q_generalized_factorial_at(std::int64_t t, std::int64_t alpha, std::int64_t n) {
  if (n < 0) throw NegativeArgument("order must be >= 0");
  LaurentPoly out(1L);
  for (std::int64_t i = 0; i < n; ++i) out *= qint_signed(t - i * alpha);
  return out;
}

TruncSeries<LaurentPoly> qwl_egf_series_scaled(std::int64_t alpha, std::int64_t k,
                                               std::size_t order) {
  require_positive_alpha(alpha);
  if (k < 0) throw NegativeArgument("k must be >= 0");
  using Series = TruncSeries<LaurentPoly>;
  const QBase base(alpha);
  Series sum(order);
  Series product = Series::one(order);
  for (std::int64_t j = 0; j <= k; ++j) {
    if (j > 0) {
      const Series factor =
          Series::one(order) - Series::term(order, qint(alpha).shifted(alpha * (j - 1)), 1);
      product = product * ts_inverse(factor);
    }
    LaurentPoly weight = qbinom(k, j, base).shifted(alpha * (k - j) * (k - j - 1) / 2);
    if ((k - j) % 2 != 0) weight = -weight;
    sum += product * weight;
  }
  return sum;
}

}  // namespace lahq
