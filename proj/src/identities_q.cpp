// q-analogue identities. Divisions are cleared so that both sides are compared
// as Laurent polynomials.

#include <random>

#include "identities.hpp"
#include "lahq/classical.hpp"
#include "lahq/qcalc.hpp"
#include "lahq/qwhitney.hpp"
#include "lahq/whitney.hpp"

namespace lahq::detail {

namespace {

using std::int64_t;

ParamRange capped(std::string name, int64_t lo, int64_t hi) {
  return ParamRange{std::move(name), lo, hi, true};
}
ParamRange fixed(std::string name, int64_t lo, int64_t hi) {
  return ParamRange{std::move(name), lo, hi, false};
}

bool k_le_n(const Params& p) { return param(p, "k") <= param(p, "n"); }

LaurentPoly sign_pow(int64_t e, LaurentPoly value) { return even(e) ? value : -value; }

int64_t choose2(int64_t m) { return m * (m - 1) / 2; }

LaurentPoly qint_pow(int64_t alpha, int64_t e) {
  return lp_pow(qint(alpha), static_cast<std::uint64_t>(e));
}

// prod_{i=lo}^{hi} [i]_{q^alpha}
LaurentPoly qint_product(int64_t lo, int64_t hi, int64_t alpha) {
  LaurentPoly out(1L);
  for (int64_t i = lo; i <= hi; ++i) out *= qint(i, QBase(alpha));
  return out;
}

std::string matrix_string(const std::vector<std::vector<LaurentPoly>>& m) {
  std::vector<std::string> rows;
  for (const auto& row : m) rows.push_back(join(row));
  return join(rows);
}

std::vector<std::vector<LaurentPoly>> identity(int64_t dim) {
  std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(dim),
                                          std::vector<LaurentPoly>(static_cast<std::size_t>(dim)));
  for (int64_t i = 0; i < dim; ++i) m[i][i] = LaurentPoly(1L);
  return m;
}

// Left side of the qr2 family: sum_j (-[a])^j q^{-e(j)} L[k,j] [n+j]_{q^a}!,
// where e(j) = a(nj + C(j+1,2)) corrected or nj + C(j+1,2) as printed.
LaurentPoly qr2_lhs(int64_t a, int64_t k, int64_t n, bool corrected) {
  LaurentPoly sum;
  for (int64_t j = 0; j <= k; ++j) {
    int64_t e = n * j + choose2(j + 1);
    if (corrected) e *= a;
    LaurentPoly term = qint_pow(a, j) * qwl(a, k, j) * qfact(n + j, QBase(a));
    sum += sign_pow(j, term.shifted(-e));
  }
  return sum;
}

// (-[a])^k [n]! [n+1]!/[n-k+1]!, times q^{-a(k(n+1) - C(k,2))} when corrected.
LaurentPoly qr2_rhs(int64_t a, int64_t k, int64_t n, bool corrected) {
  LaurentPoly value = qint_pow(a, k) * qfact(n, QBase(a)) * qint_product(n - k + 2, n + 1, a);
  value = sign_pow(k, value);
  if (corrected) value = value.shifted(-a * (k * (n + 1) - choose2(k)));
  return value;
}

constexpr std::size_t kQEgfOrder = 8;

std::vector<LaurentPoly> random_sequence(int64_t alpha, int64_t k) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * alpha + k + 17));
  std::uniform_int_distribution<int> term_count(1, 3), exponent(-3, 6), num(-5, 5), den(1, 3);
  std::vector<LaurentPoly> f;
  for (int64_t j = 0; j <= k; ++j) {
    LaurentPoly p;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
      const int e = exponent(rng);
      p += LaurentPoly::monomial(make_rat(num(rng), den(rng)), e);
    }
    f.push_back(p);
  }
  return f;
}

}  // namespace

void register_q_identities(std::vector<IdentitySpec>& out) {
  const Suite S = Suite::q;

  out.push_back(
      {"q_defs",
       "form 1: [t|a]_n = sum w1[n,k] [t]^k; form 2: [t]^n = sum w2[n,k] [t|a]_k; "
       "form 3: [t|-a]_n = sum L[n,k] [t|a]_k; checked at t = 0, a, ..., n a",
       "horizontal generating functions of the translated q-Whitney numbers", S,
       {{fixed("alpha", -2, 2), capped("n", 0, 8), fixed("form", 1, 3)},
        [](const Params& p) { return param(p, "form") != 3 || param(p, "alpha") > 0; }},
       false,
       [](const Params& p, Mode) -> Sides {
         const auto a = param(p, "alpha"), n = param(p, "n"), form = param(p, "form");
         std::vector<LaurentPoly> lhs, rhs;
         for (int64_t m = 0; m <= n; ++m) {
           const int64_t t = m * a;
           const LaurentPoly qt = qint_signed(t);
           LaurentPoly right;
           switch (form) {
             case 1:
               lhs.push_back(q_generalized_factorial_at(t, a, n));
               for (int64_t k = 0; k <= n; ++k) right += qw1(a, n, k) * lp_pow(qt, k);
               break;
             case 2:
               lhs.push_back(lp_pow(qt, static_cast<std::uint64_t>(n)));
               for (int64_t k = 0; k <= n; ++k) right += qw2(a, n, k) * q_generalized_factorial_at(t, a, k);
               break;
             default:
               lhs.push_back(q_generalized_factorial_at(t, -a, n));
               for (int64_t k = 0; k <= n; ++k) right += qwl(a, n, k) * q_generalized_factorial_at(t, a, k);
               break;
           }
           rhs.push_back(right);
         }
         return {join(lhs), join(rhs)};
       }});

  out.push_back({"qw1w2", "L_a[n,k] = sum_j w1_{-a}[n,j] w2_a[j,k]",
                 "q-Whitney-Lah numbers as sums of products", S,
                 {{fixed("alpha", 1, 2), capped("n", 0, 8), capped("k", 0, 8)}, k_le_n}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n"), k = param(p, "k");
                   LaurentPoly sum;
                   for (int64_t j = k; j <= n; ++j) sum += qw1(-a, n, j) * qw2(a, j, k);
                   return {qwl(a, n, k).to_string(), sum.to_string()};
                 }});

  out.push_back({"qr1", "L_a[n,k] by the alternating q-binomial sum equals the recurrence",
                 "explicit formula for the q-Whitney-Lah numbers", S,
                 {{fixed("alpha", 1, 2), capped("n", 0, 8), capped("k", 0, 8)}, k_le_n}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n"), k = param(p, "k");
                   return {qwl_explicit(a, n, k).to_string(), qwl(a, n, k).to_string()};
                 }});

  out.push_back(
      {"qr1_1",
       "[k]_{q^a}! [a]^k L_a[n,k] = [n]_{q^a}! [t^n] sum_j (-1)^{k-j} q^{a C(k-j,2)} "
       "C(k,j)_{q^a} prod_{m<j} (1 - q^{am}[a] t)^-1",
       "EGF of the q-Whitney-Lah numbers (denominators cleared)", S,
       {{fixed("alpha", 1, 2), capped("k", 0, 4)}, {}}, false,
       [](const Params& p, Mode) -> Sides {
         const auto a = param(p, "alpha"), k = param(p, "k");
         const QBase base(a);
         const auto sum = qwl_egf_series_scaled(a, k, kQEgfOrder);
         std::vector<LaurentPoly> lhs, rhs;
         const LaurentPoly scale = qfact(k, base) * qint_pow(a, k);
         for (int64_t n = 0; n <= static_cast<int64_t>(kQEgfOrder); ++n) {
           lhs.push_back(scale * qwl(a, n, k));
           rhs.push_back(qfact(n, base) * sum[static_cast<std::size_t>(n)]);
         }
         return {join(lhs), join(rhs)};
       }});

  out.push_back(
      {"qr2",
       "sum_j (-[a])^j q^{-a(nj+C(j+1,2))} L_a[k,j] [n+j]! = "
       "(-[a])^k q^{-a(k(n+1)-C(k,2))} [n]! [n+1]!/[n-k+1]! (factorials in base q^a); "
       "as_printed drops the factor a in the left exponent and the right q-power",
       "q-analogue of the Whitney-Lah Guo-Qi identity", S,
       {{fixed("alpha", 1, 2), capped("k", 1, 6), capped("n", 0, 8)},
        [](const Params& p) { return param(p, "n") >= param(p, "k") - 1; }},
       true,
       [](const Params& p, Mode mode) -> Sides {
         const auto a = param(p, "alpha"), k = param(p, "k"), n = param(p, "n");
         const bool corrected = mode == Mode::corrected;
         return {qr2_lhs(a, k, n, corrected).to_string(), qr2_rhs(a, k, n, corrected).to_string()};
       }});

  out.push_back(
      {"qr2_1",
       "sum_j (-1)^j q^{-nj-C(j+1,2)} L_q(k,j) [n+j]! = (-1)^k q^{-(k(n+1)-C(k,2))} "
       "[n]! [n+1]!/[n-k+1]!; as_printed compares against (-1)^k [n]! [n+1]/[n-k+1] "
       "after multiplying both sides by [n-k+1]",
       "q-analogue of the Guo-Qi identity", S,
       {{capped("k", 1, 6), capped("n", 0, 8)},
        [](const Params& p) { return param(p, "n") >= param(p, "k") - 1; }},
       true,
       [](const Params& p, Mode mode) -> Sides {
         const auto k = param(p, "k"), n = param(p, "n");
         LaurentPoly lhs;
         for (int64_t j = 0; j <= k; ++j) {
           lhs += sign_pow(j, (qlah_gr(k, j) * qfact(n + j)).shifted(-(n * j + choose2(j + 1))));
         }
         if (mode == Mode::corrected) {
           LaurentPoly rhs = sign_pow(k, qfact(n) * qint_product(n - k + 2, n + 1, 1));
           return {lhs.to_string(), rhs.shifted(-(k * (n + 1) - choose2(k))).to_string()};
         }
         return {(lhs * qint(n - k + 1)).to_string(),
                 sign_pow(k, qfact(n) * qint(n + 1)).to_string()};
       }});

  out.push_back({"inv_qtw", "order 0: W1 W2 = I; order 1: W2 W1 = I",
                 "inverse relation between the q-Whitney numbers of both kinds", S,
                 {{fixed("alpha", -2, 2), capped("dim", 1, 8), fixed("order", 0, 1)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), dim = param(p, "dim"), order = param(p, "order");
                   std::vector<std::vector<LaurentPoly>> m = identity(dim);
                   for (int64_t n = 0; n < dim; ++n) {
                     for (int64_t c = 0; c < dim; ++c) {
                       LaurentPoly sum;
                       for (int64_t j = 0; j < dim; ++j) {
                         sum += order == 0 ? qw1(a, n, j) * qw2(a, j, c) : qw2(a, n, j) * qw1(a, j, c);
                       }
                       m[n][c] = sum;
                     }
                   }
                   return {matrix_string(m), matrix_string(identity(dim))};
                 }});

  out.push_back({"qbinom_inv",
                 "g_m = sum_j C(m,j)_{q^a} f_j inverts to "
                 "f_m = sum_j (-1)^{m-j} q^{a C(m-j,2)} C(m,j)_{q^a} g_j",
                 "q-binomial inversion", S,
                 {{fixed("alpha", 1, 2), capped("k", 0, 8)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), k = param(p, "k");
                   const QBase base(a);
                   const auto f = random_sequence(a, k);
                   std::vector<LaurentPoly> g, back;
                   for (int64_t m = 0; m <= k; ++m) {
                     LaurentPoly s;
                     for (int64_t j = 0; j <= m; ++j) s += qbinom(m, j, base) * f[j];
                     g.push_back(s);
                   }
                   for (int64_t m = 0; m <= k; ++m) {
                     LaurentPoly s;
                     for (int64_t j = 0; j <= m; ++j) {
                       s += sign_pow(m - j, (qbinom(m, j, base) * g[j]).shifted(a * choose2(m - j)));
                     }
                     back.push_back(s);
                   }
                   return {join(f), join(back)};
                 }});

  out.push_back({"pe1",
                 "form 0: [aj|-a]_n = [a]^n prod_{i<n} [j+i]_{q^a}; "
                 "form 1: [j+n-1]_{q^a,n} / [n]_{q^a}! = C(j+n-1,n)_{q^a}",
                 "auxiliary q-factorial identities", S,
                 {{fixed("alpha", 1, 3), fixed("j", 0, 5), capped("n", 0, 6), fixed("form", 0, 1)},
                  [](const Params& p) { return param(p, "form") == 0 || param(p, "j") >= 1; }},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), j = param(p, "j"), n = param(p, "n");
                   const QBase base(a);
                   if (param(p, "form") == 0) {
                     LaurentPoly rhs = qint_pow(a, n);
                     for (int64_t i = 0; i < n; ++i) rhs *= qint(j + i, base);
                     return {gqf_at(j, a, Increment::negative, n).to_string(), rhs.to_string()};
                   }
                   const LaurentPoly lhs = lp_div_exact(qfalling(j + n - 1, n, base), qfact(n, base));
                   return {lhs.to_string(), qbinom(j + n - 1, n, base).to_string()};
                 }});

  out.push_back({"pe2", "prod_{m<n} (1 - q^m t)^-1 = sum_i C(n+i-1,i)_q t^i up to t^8",
                 "q-negative-binomial expansion", S, {{fixed("n", 1, 4)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n");
                   using Series = TruncSeries<LaurentPoly>;
                   Series product = Series::one(kQEgfOrder);
                   for (int64_t m = 0; m < n; ++m) {
                     product = product * ts_inverse(Series::one(kQEgfOrder) -
                                                    Series::term(kQEgfOrder, LaurentPoly::power(m), 1));
                   }
                   std::vector<LaurentPoly> rhs;
                   for (int64_t i = 0; i <= static_cast<int64_t>(kQEgfOrder); ++i) {
                     rhs.push_back(qbinom(n + i - 1, i));
                   }
                   return {join(product.coeffs()), join(rhs)};
                 }});

  out.push_back({"qgqif1", "D_a[n]_q = sum_j (sum_{k<=j} L_a[j,k]) w2_{-a}[n,j]",
                 "Qi-type formula for translated q-Dowling numbers", S,
                 {{fixed("alpha", 1, 2), capped("n", 0, 6)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n");
                   return {qdowling(a, n).to_string(), qdowling_qi(a, n).to_string()};
                 }});

  out.push_back(
      {"q_limits",
       "q -> 1 reductions; family 0 [n], 1 [n]!, 2 q-binomial, 3 q-falling, 4 L_a, 5 w2, "
       "6 w1 (signed), 7 q-Dowling, 8 q-Lah",
       "q-analogues reduce to the classical values", S,
       {{fixed("family", 0, 8), fixed("alpha", 1, 2), capped("n", 0, 10)},
        [](const Params& p) {
          const auto f = param(p, "family");
          if (f == 8 && param(p, "alpha") != 1) return false;
          return f <= 3 || param(p, "n") <= 8;
        }},
       false,
       [](const Params& p, Mode) -> Sides {
         const auto f = param(p, "family"), a = param(p, "alpha"), n = param(p, "n");
         const QBase base(a);
         std::vector<ExactRat> lhs, rhs;
         auto scale = [&](int64_t k) { return int_pow(ExactInt(a), static_cast<std::uint64_t>(n - k)); };
         switch (f) {
           case 0:
             lhs.push_back(lp_eval_q1(qint(n, base)));
             rhs.push_back(ExactRat(n));
             break;
           case 1:
             lhs.push_back(lp_eval_q1(qfact(n, base)));
             rhs.push_back(ExactRat(factorial(n)));
             break;
           case 7:
             lhs.push_back(lp_eval_q1(qdowling(a, n)));
             rhs.push_back(ExactRat(dowling(a, n)));
             break;
           default:
             for (int64_t k = 0; k <= n; ++k) {
               switch (f) {
                 case 2:
                   lhs.push_back(lp_eval_q1(qbinom(n, k, base)));
                   rhs.push_back(ExactRat(binomial(n, k)));
                   break;
                 case 3:
                   lhs.push_back(lp_eval_q1(qfalling(n, k, base)));
                   rhs.push_back(ExactRat(ExactInt(factorial(n) / factorial(n - k))));
                   break;
                 case 4:
                   lhs.push_back(lp_eval_q1(qwl(a, n, k)));
                   rhs.push_back(ExactRat(ExactInt(scale(k) * lah(n, k))));
                   break;
                 case 5:
                   lhs.push_back(lp_eval_q1(qw2(a, n, k)));
                   rhs.push_back(ExactRat(ExactInt(scale(k) * stirling2(n, k))));
                   break;
                 case 6: {
                   lhs.push_back(lp_eval_q1(qw1(a, n, k)));
                   ExactInt v = scale(k) * stirling1u(n, k);
                   if (!even(n - k)) v = -v;
                   rhs.push_back(ExactRat(v));
                   break;
                 }
                 default:
                   lhs.push_back(lp_eval_q1(qlah_gr(n, k)));
                   rhs.push_back(ExactRat(lah(n, k)));
                   break;
               }
             }
         }
         return {join(lhs), join(rhs)};
       }});

  out.push_back({"qlah", "Garsia-Remmel q-Lah: recurrence = explicit formula = L_1[n,k]_q",
                 "q-Lah numbers", S,
                 {{capped("n", 1, 8), capped("k", 1, 8)}, k_le_n}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n"), k = param(p, "k");
                   const std::string rec = qlah_gr(n, k).to_string();
                   const std::string expl = qlah_gr(n, k, QLahRoute::explicit_formula).to_string();
                   return {rec + "; " + qwl(1, n, k).to_string(), expl + "; " + expl};
                 }});
}

}  // namespace lahq::detail
