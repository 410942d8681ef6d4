#include "lahq/whitney.hpp"

#include <cmath>
#include <string>

#include "lahq/classical.hpp"

namespace lahq {

void require_positive_alpha(std::int64_t alpha) {
  if (alpha < 1) throw InvalidAlpha("alpha must be a positive integer, got " + std::to_string(alpha));
}

WhitneyTriangle whitney_triangle(WhitneyFamily family, std::int64_t alpha, std::int64_t n_max) {
  require_positive_alpha(alpha);
  if (n_max < 0) throw InvalidRange("n_max must be >= 0");
  WhitneyTriangle t;
  t.family = family;
  t.alpha = alpha;
  t.rows.resize(static_cast<std::size_t>(n_max + 1));
  t.rows[0] = {ExactInt(1)};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    auto& row = t.rows[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n + 1), ExactInt(0));
    for (std::int64_t k = 1; k <= n; ++k) {
      std::int64_t weight = 0;
      switch (family) {
        case WhitneyFamily::tw1: weight = alpha * (n - 1); break;
        case WhitneyFamily::tw2: weight = alpha * k; break;
        case WhitneyFamily::twl: weight = alpha * (n + k - 1); break;
      }
      row[k] = t.at(n - 1, k - 1) + weight * t.at(n - 1, k);
    }
  }
  return t;
}

namespace {

TriangleCache<WhitneyFamily, ExactInt>& cache() {
  static TriangleCache<WhitneyFamily, ExactInt> instance(&whitney_triangle);
  return instance;
}

ExactInt lookup(WhitneyFamily family, std::int64_t alpha, std::int64_t n, std::int64_t k) {
  require_positive_alpha(alpha);
  if (n < 0 || k < 0 || k > n) return 0;
  return cache().get(family, alpha, n)->at(n, k);
}

ExactInt rising_at(std::int64_t x, std::int64_t n) {
  ExactInt out = 1;
  for (std::int64_t i = 0; i < n; ++i) out *= x + i;
  return out;
}

ExactInt exact_quotient(const ExactInt& num, const ExactInt& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw NonExactDivision(num.get_str() + " / " + den.get_str());
  }
  ExactInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

std::shared_ptr<const WhitneyTriangle> whitney_table(WhitneyFamily family, std::int64_t alpha,
                                                     std::int64_t n_max) {
  require_positive_alpha(alpha);
  return cache().get(family, alpha, n_max);
}

ExactInt tw1(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  return lookup(WhitneyFamily::tw1, alpha, n, k);
}

ExactInt tw2(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  return lookup(WhitneyFamily::tw2, alpha, n, k);
}

ExactInt tw2_explicit(std::int64_t alpha, std::int64_t n, std::int64_t k) {
  require_positive_alpha(alpha);
  if (n < 0 || k < 0 || k > n) return 0;
  ExactInt sum = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    const ExactInt term = binomial(k, j) * int_pow(ExactInt(alpha * j), static_cast<std::uint64_t>(n));
    if ((k - j) % 2 == 0) sum += term; else sum -= term;
  }
  return exact_quotient(sum, int_pow(ExactInt(alpha), static_cast<std::uint64_t>(k)) * factorial(k));
}

ExactInt twl(std::int64_t alpha, std::int64_t n, std::int64_t k, TwlMethod method) {
  require_positive_alpha(alpha);
  if (n < 0 || k < 0 || k > n) return 0;
  const ExactInt scale = int_pow(ExactInt(alpha), static_cast<std::uint64_t>(n - k));
  switch (method) {
    case TwlMethod::recurrence:
      return lookup(WhitneyFamily::twl, alpha, n, k);
    case TwlMethod::explicit_sum: {
      ExactInt sum = 0;
      for (std::int64_t j = 0; j <= k; ++j) {
        const ExactInt term = binomial(k, j) * rising_at(j, n);
        if ((k - j) % 2 == 0) sum += term; else sum -= term;
      }
      return scale * exact_quotient(sum, factorial(k));
    }
    case TwlMethod::product:
      if (n == 0) return 1;  // C(-1, 0) = 1 covers (0,0) as well
      return scale * exact_quotient(factorial(n), factorial(k)) * binomial(n - 1, n - k);
    case TwlMethod::scaled:
      return scale * lah(n, k);
  }
  return 0;
}

MansourSpec MansourSpec::whitney_lah(std::int64_t alpha) {
  return MansourSpec{[alpha](std::int64_t i) { return ExactRat(alpha * i); },
                     [alpha](std::int64_t j) { return ExactRat(alpha * j); }};
}

ExactRat mansour_u(const MansourSpec& spec, std::int64_t n, std::int64_t k, MansourRoute route) {
  if (n < 0 || k < 0) return 0;
  if (route == MansourRoute::recurrence) {
    // rows[m][j] for m <= n, j <= k
    std::vector<std::vector<ExactRat>> u(static_cast<std::size_t>(n + 1),
                                         std::vector<ExactRat>(static_cast<std::size_t>(k + 1)));
    for (std::int64_t m = 0; m <= n; ++m) {
      for (std::int64_t j = 0; j <= k; ++j) {
        ExactRat value;
        if (m == 0) {
          value = j == 0 ? 1 : 0;
        } else if (j == 0) {
          value = (spec.a(m - 1) + spec.b(0)) * u[m - 1][0];
        } else {
          value = u[m - 1][j - 1] + (spec.a(m - 1) + spec.b(j)) * u[m - 1][j];
        }
        u[m][j] = value;
      }
    }
    return u[n][k];
  }

  const std::int64_t denominator_top = route == MansourRoute::explicit_sum ? k : n - 1;
  ExactRat sum = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    const ExactRat bj = spec.b(j);
    ExactRat numerator = 1;
    for (std::int64_t i = 0; i < n; ++i) numerator *= bj + spec.a(i);
    ExactRat denominator = 1;
    for (std::int64_t i = 0; i <= denominator_top; ++i) {
      if (i == j) continue;
      const ExactRat diff = bj - spec.b(i);
      if (diff == 0) {
        throw DuplicateBValues("b_" + std::to_string(j) + " = b_" + std::to_string(i));
      }
      denominator *= diff;
    }
    sum += numerator / denominator;
  }
  return sum;
}

ExactInt dowling(std::int64_t alpha, std::int64_t n) {
  require_positive_alpha(alpha);
  if (n < 0) return 0;
  const auto table = whitney_table(WhitneyFamily::tw2, alpha, n);
  ExactInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) sum += table->at(n, k);
  return sum;
}

double dowling_dobinski(std::int64_t alpha, std::int64_t n, double rel_tol, std::int64_t max_terms) {
  require_positive_alpha(alpha);
  if (!(rel_tol > 0)) throw InvalidRange("rel_tol must be positive");
  if (n < 0) throw NegativeArgument("dowling_dobinski with n < 0");
  const double a = static_cast<double>(alpha);
  // term_i = (i a)^n / (i! a^i); term_0 = [n == 0].
  double term = n == 0 ? 1.0 : 0.0;
  double sum = term;
  double previous = term;
  for (std::int64_t i = 1; i < max_terms; ++i) {
    if (i == 1) {
      term = std::pow(a, static_cast<double>(n - 1));
    } else {
      const double ratio = static_cast<double>(i) / static_cast<double>(i - 1);
      term *= std::pow(ratio, static_cast<double>(n)) / (static_cast<double>(i) * a);
    }
    sum += term;
    if (term <= previous && term < rel_tol * sum) return std::exp(-1.0 / a) * sum;
    previous = term;
  }
  throw NoConvergence("Dobinski series did not settle within " + std::to_string(max_terms) +
                      " terms");
}

ExactInt dowling_qi(std::int64_t alpha, std::int64_t n) {
  require_positive_alpha(alpha);
  if (n < 0) return 0;
  const auto wl = whitney_table(WhitneyFamily::twl, alpha, n);
  const auto w2 = whitney_table(WhitneyFamily::tw2, alpha, n);
  ExactInt sum = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    ExactInt row_sum = 0;
    for (std::int64_t k = 0; k <= j; ++k) row_sum += wl->at(j, k);
    const ExactInt term = row_sum * w2->at(n, j);
    if ((n - j) % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

TruncSeries<ExactRat> twl_egf_series(std::int64_t alpha, std::int64_t k, std::size_t order) {
  require_positive_alpha(alpha);
  if (k < 0) throw NegativeArgument("k must be >= 0");
  using Series = TruncSeries<ExactRat>;
  const Series denominator = Series::one(order) - Series::term(order, ExactRat(alpha), 1);
  const Series base = Series::term(order, ExactRat(1), 1) * ts_inverse(denominator);
  return ts_pow(base, static_cast<std::uint64_t>(k)) * make_rat(1, factorial(k));
}

}  // namespace lahq
