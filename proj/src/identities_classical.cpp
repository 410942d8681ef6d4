// Classical and translated-Whitney identities.

#include <cmath>
#include <cstdio>

#include "identities.hpp"
#include "lahq/classical.hpp"
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

std::string t_str(const LaurentPoly& p) { return p.to_string("t"); }

ExactInt signed_term(int64_t exponent, const ExactInt& value) {
  return even(exponent) ? value : ExactInt(-value);
}

ExactInt alpha_pow(int64_t alpha, int64_t e) {
  return int_pow(ExactInt(alpha), static_cast<std::uint64_t>(e));
}

constexpr std::size_t kEgfOrder = 12;

std::vector<ExactRat> egf_rhs(int64_t alpha, int64_t k) {
  return twl_egf_series(alpha, k, kEgfOrder).coeffs();
}

std::vector<ExactRat> egf_lhs(int64_t alpha, int64_t k) {
  std::vector<ExactRat> out;
  for (int64_t n = 0; n <= static_cast<int64_t>(kEgfOrder); ++n) {
    out.push_back(make_rat(twl(alpha, n, k), factorial(n)));
  }
  return out;
}

std::string identity_matrix(int64_t dim) {
  std::vector<std::string> rows;
  for (int64_t i = 0; i < dim; ++i) {
    std::vector<ExactInt> row(static_cast<std::size_t>(dim), ExactInt(0));
    row[static_cast<std::size_t>(i)] = 1;
    rows.push_back(join(row));
  }
  return join(rows);
}

ExactRat mansour_seq_a(int64_t seq, int64_t alpha, int64_t i) {
  if (seq == 0) return ExactRat(alpha * i);
  return make_rat(i * i, alpha + 1) + 1;
}

ExactRat mansour_seq_b(int64_t seq, int64_t alpha, int64_t j) {
  if (seq == 0) return ExactRat(alpha * j);
  return ExactRat(alpha * j) + make_rat(1, j + 2);
}

}  // namespace

void register_classical_identities(std::vector<IdentitySpec>& out) {
  const Suite S = Suite::classical;

  out.push_back({"lah_enum", "L(n,k) equals the ordered-list partition count",
                 "Lah numbers count partitions into linearly ordered subsets", S,
                 {{capped("n", 0, 8), capped("k", 0, 8)}, k_le_n}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n"), k = param(p, "k");
                   return {to_string(lah(n, k)), to_string(lah_oracle(n, k))};
                 }});

  out.push_back({"lah_rec", "L(n+1,k) = L(n,k-1) + (n+k) L(n,k)", "Lah recurrence", S,
                 {{capped("n", 0, 12), capped("k", 1, 13)},
                  [](const Params& p) { return param(p, "k") <= param(p, "n") + 1; }},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n"), k = param(p, "k");
                   return {to_string(lah(n + 1, k)),
                           to_string(ExactInt(lah(n, k - 1) + (n + k) * lah(n, k)))};
                 }});

  out.push_back({"lah_egf", "sum_n L(n,k) t^n/n! = (t/(1-t))^k / k!", "Lah EGF", S,
                 {{capped("k", 0, 6)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto k = param(p, "k");
                   std::vector<ExactRat> lhs;
                   for (int64_t n = 0; n <= static_cast<int64_t>(kEgfOrder); ++n) {
                     lhs.push_back(make_rat(lah(n, k), factorial(n)));
                   }
                   return {join(lhs), join(egf_rhs(1, k))};
                 }});

  out.push_back({"lah_hgf", "<t>_n = sum_k L(n,k) (t)_k", "rising in falling factorials", S,
                 {{capped("n", 0, 10)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n");
                   LaurentPoly rhs;
                   for (int64_t k = 0; k <= n; ++k) rhs += lah(n, k) * falling_poly(k);
                   return {t_str(rising_poly(n)), t_str(rhs)};
                 }});

  out.push_back({"stirling_hgf",
                 "form 0: (t)_n = sum (-1)^{n-k} c(n,k) t^k; form 1: t^n = sum S(n,k) (t)_k; "
                 "form 2: <t>_n = sum c(n,k) t^k",
                 "Stirling generating relations", S,
                 {{capped("n", 0, 10), fixed("form", 0, 2)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n"), form = param(p, "form");
                   LaurentPoly lhs, rhs;
                   for (int64_t k = 0; k <= n; ++k) {
                     switch (form) {
                       case 0: rhs += signed_term(n - k, stirling1u(n, k)) * LaurentPoly::power(k); break;
                       case 1: rhs += stirling2(n, k) * falling_poly(k); break;
                       default: rhs += stirling1u(n, k) * LaurentPoly::power(k); break;
                     }
                   }
                   lhs = form == 0 ? falling_poly(n) : form == 1 ? LaurentPoly::power(n) : rising_poly(n);
                   return {t_str(lhs), t_str(rhs)};
                 }});

  out.push_back({"lah_conv", "L(n,k) = sum_j c(n,j) S(j,k)", "Lah-Stirling convolution", S,
                 {{capped("n", 0, 12), capped("k", 0, 12)}, k_le_n}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n"), k = param(p, "k");
                   ExactInt sum = 0;
                   for (int64_t j = k; j <= n; ++j) sum += stirling1u(n, j) * stirling2(j, k);
                   return {to_string(lah(n, k)), to_string(sum)};
                 }});

  out.push_back({"qi_bell", "B_n = sum_k (-1)^{n-k} (sum_l L(k,l)) S(n,k)", "Qi's formula", S,
                 {{capped("n", 1, 12)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto n = param(p, "n");
                   ExactInt sum = 0;
                   for (int64_t k = 1; k <= n; ++k) {
                     ExactInt row = 0;
                     for (int64_t l = 1; l <= k; ++l) row += lah(k, l);
                     sum += signed_term(n - k, row * stirling2(n, k));
                   }
                   return {to_string(bell(n)), to_string(sum)};
                 }});

  out.push_back({"gouqi", "sum_j (-1)^j L(k,j) (n+j)! = (-1)^k n!(n+1)!/(n-k+1)!",
                 "Guo-Qi identity", S,
                 {{capped("k", 2, 8), capped("n", 1, 12)},
                  [](const Params& p) { return param(p, "n") >= param(p, "k") - 1; }},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto k = param(p, "k"), n = param(p, "n");
                   ExactInt lhs = 0;
                   for (int64_t j = 1; j <= k; ++j) lhs += signed_term(j, lah(k, j) * factorial(n + j));
                   const ExactInt rhs =
                       signed_term(k, factorial(n) * factorial(n + 1) / factorial(n - k + 1));
                   return {to_string(lhs), to_string(rhs)};
                 }});

  out.push_back({"graham",
                 "sum_j C(l,m+j) C(s+j,n) (-1)^j = (-1)^{l+m} C(s-m,n-l)",
                 "alternating binomial sum", S,
                 {{capped("l", 0, 8), fixed("m", -2, 2), capped("s", 0, 8), capped("n", 0, 8)}, {}},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto l = param(p, "l"), m = param(p, "m"), s = param(p, "s"),
                              n = param(p, "n");
                   ExactInt lhs = 0;
                   for (int64_t j = -m; j <= l - m; ++j) {
                     lhs += signed_term(j, binomial(l, m + j) * binomial(s + j, n));
                   }
                   return {to_string(lhs), to_string(signed_term(l + m, binomial(s - m, n - l)))};
                 }});

  out.push_back({"w_hgf",
                 "form 12: (t|-a)_n = sum w~(n,k) t^k; form 13: t^n = sum W~(n,k) (t|a)_k",
                 "translated Whitney horizontal generating functions", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 10), fixed("form", 12, 13)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n"), form = param(p, "form");
                   LaurentPoly lhs, rhs;
                   if (form == 12) {
                     lhs = generalized_falling_poly(n, -a);
                     for (int64_t k = 0; k <= n; ++k) rhs += tw1(a, n, k) * LaurentPoly::power(k);
                   } else {
                     lhs = LaurentPoly::power(n);
                     for (int64_t k = 0; k <= n; ++k) rhs += tw2(a, n, k) * generalized_falling_poly(k, a);
                   }
                   return {t_str(lhs), t_str(rhs)};
                 }});

  out.push_back({"tw2_explicit", "W~(n,k) = (a^k k!)^-1 sum_j (-1)^{k-j} C(k,j) (a j)^n",
                 "explicit formula for W~", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 12), capped("k", 0, 12)}, k_le_n}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n"), k = param(p, "k");
                   return {to_string(tw2(a, n, k)), to_string(tw2_explicit(a, n, k))};
                 }});

  out.push_back({"wl_rec", "w^(n+1,k) = w^(n,k-1) + a(n+k) w^(n,k) on closed-form values",
                 "Whitney-Lah recurrence", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 11), capped("k", 1, 12)},
                  [](const Params& p) { return param(p, "k") <= param(p, "n") + 1; }},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n"), k = param(p, "k");
                   const auto P = TwlMethod::product;
                   return {to_string(twl(a, n + 1, k, P)),
                           to_string(ExactInt(twl(a, n, k - 1, P) + a * (n + k) * twl(a, n, k, P)))};
                 }});

  out.push_back({"wl_hgf", "(t|-a)_n = sum w^(n,k) (t|a)_k",
                 "Whitney-Lah horizontal generating function", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 10)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n");
                   LaurentPoly rhs;
                   for (int64_t k = 0; k <= n; ++k) rhs += twl(a, n, k) * generalized_falling_poly(k, a);
                   return {t_str(generalized_falling_poly(n, -a)), t_str(rhs)};
                 }});

  out.push_back({"wl_conv", "w^(n,j) = sum_k w~(n,k) W~(k,j)", "sum of products", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 12), capped("j", 0, 12)},
                  [](const Params& p) { return param(p, "j") <= param(p, "n"); }},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n"), j = param(p, "j");
                   ExactInt sum = 0;
                   for (int64_t k = j; k <= n; ++k) sum += tw1(a, n, k) * tw2(a, k, j);
                   return {to_string(twl(a, n, j)), to_string(sum)};
                 }});

  out.push_back({"mansour",
                 "u(n,k) by recurrence = sum_j prod_i (b_j+a_i) / prod_{i!=j} (b_j-b_i); "
                 "seq 0: a_i = alpha i, b_j = alpha j; seq 1: rational test sequences",
                 "two-sequence recurrence and its explicit formula", S,
                 {{fixed("seq", 0, 1), fixed("alpha", 1, 3), capped("n", 0, 8), capped("k", 0, 8)},
                  k_le_n},
                 true,
                 [](const Params& p, Mode mode) -> Sides {
                   const auto seq = param(p, "seq"), a = param(p, "alpha"), n = param(p, "n"),
                              k = param(p, "k");
                   const MansourSpec spec{[=](int64_t i) { return mansour_seq_a(seq, a, i); },
                                          [=](int64_t j) { return mansour_seq_b(seq, a, j); }};
                   const auto route = mode == Mode::corrected ? MansourRoute::explicit_sum
                                                              : MansourRoute::explicit_as_printed;
                   return {to_string(mansour_u(spec, n, k, MansourRoute::recurrence)),
                           to_string(mansour_u(spec, n, k, route))};
                 }});

  const std::pair<const char*, TwlMethod> routes[] = {
      {"r1", TwlMethod::explicit_sum}, {"r2", TwlMethod::scaled}, {"r2_1", TwlMethod::product}};
  const char* route_text[] = {"w^(n,k) = a^{n-k}/k! sum_j (-1)^{k-j} C(k,j) <j>_n",
                              "w^(n,k) = a^{n-k} L(n,k)",
                              "w^(n,k) = a^{n-k} n!/k! C(n-1,n-k)"};
  for (std::size_t r = 0; r < 3; ++r) {
    const TwlMethod method = routes[r].second;
    out.push_back({routes[r].first, route_text[r], "Whitney-Lah explicit forms", S,
                   {{fixed("alpha", 1, 3), capped("n", 0, 12), capped("k", 0, 12)}, k_le_n}, false,
                   [method](const Params& p, Mode) -> Sides {
                     const auto a = param(p, "alpha"), n = param(p, "n"), k = param(p, "k");
                     return {to_string(twl(a, n, k, method)),
                             to_string(twl(a, n, k, TwlMethod::recurrence))};
                   }});
  }

  out.push_back({"r3", "sum_n w^(n,k) t^n/n! = (t/(1-a t))^k / k!", "Whitney-Lah EGF", S,
                 {{fixed("alpha", 1, 3), capped("k", 0, 6)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), k = param(p, "k");
                   return {join(egf_lhs(a, k)), join(egf_rhs(a, k))};
                 }});

  out.push_back({"r4",
                 "sum_j (-a)^j w^(k,j) (n+j)! = (-a)^k n!(n+1)!/(n-k+1)!",
                 "Whitney-Lah generalization of the Guo-Qi identity", S,
                 {{fixed("alpha", 1, 3), capped("k", 2, 8), capped("n", 1, 12)},
                  [](const Params& p) { return param(p, "n") >= param(p, "k") - 1; }},
                 false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), k = param(p, "k"), n = param(p, "n");
                   ExactInt lhs = 0;
                   for (int64_t j = 1; j <= k; ++j) {
                     lhs += signed_term(j, alpha_pow(a, j) * twl(a, k, j) * factorial(n + j));
                   }
                   const ExactInt rhs = signed_term(
                       k, alpha_pow(a, k) * factorial(n) * factorial(n + 1) / factorial(n - k + 1));
                   return {to_string(lhs), to_string(rhs)};
                 }});

  out.push_back({"ortho",
                 "order 0: sum_j (-1)^{j-m} W~(n,j) w~(j,m) = delta; "
                 "order 1: sum_j (-1)^{n-j} w~(n,j) W~(j,m) = delta",
                 "orthogonality of translated Whitney numbers", S,
                 {{fixed("alpha", 1, 3), capped("dim", 1, 10), fixed("order", 0, 1)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), dim = param(p, "dim"), order = param(p, "order");
                   std::vector<std::string> rows;
                   for (int64_t n = 0; n < dim; ++n) {
                     std::vector<ExactInt> row;
                     for (int64_t m = 0; m < dim; ++m) {
                       ExactInt sum = 0;
                       for (int64_t j = 0; j < dim; ++j) {
                         sum += order == 0 ? signed_term(j - m, tw2(a, n, j) * tw1(a, j, m))
                                           : signed_term(n - j, tw1(a, n, j) * tw2(a, j, m));
                       }
                       row.push_back(sum);
                     }
                     rows.push_back(join(row));
                   }
                   return {join(rows), identity_matrix(dim)};
                 }});

  out.push_back({"gqif1", "D(n) = sum_j (-1)^{n-j} (sum_k w^(j,k)) W~(n,j)",
                 "Qi-type formula for translated Dowling numbers", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 12)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n");
                   return {to_string(dowling(a, n)), to_string(dowling_qi(a, n))};
                 }});

  out.push_back({"dobinski",
                 "D(n) = e^{-1/a} sum_i (i a)^n/(i! a^i), relative error < 1e-9",
                 "Dobinski-type series for translated Dowling numbers", S,
                 {{fixed("alpha", 1, 3), capped("n", 0, 10)}, {}}, false,
                 [](const Params& p, Mode) -> Sides {
                   const auto a = param(p, "alpha"), n = param(p, "n");
                   const ExactInt exact = dowling(a, n);
                   const double approx = dowling_dobinski(a, n, 1e-12, 200);
                   const double reference = exact.get_d();
                   if (std::abs(approx - reference) / reference < 1e-9) {
                     return {to_string(exact), to_string(exact)};
                   }
                   char buffer[64];
                   std::snprintf(buffer, sizeof buffer, "%.17g", approx);
                   return {to_string(exact), buffer};
                 }});
}

}  // namespace lahq::detail
