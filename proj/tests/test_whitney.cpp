#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "lahq/classical.hpp"
#include "lahq/whitney.hpp"

namespace lahq {
namespace {

constexpr TwlMethod kAllMethods[] = {TwlMethod::recurrence, TwlMethod::explicit_sum,
                                     TwlMethod::product, TwlMethod::scaled};

ExactInt alpha_pow(std::int64_t alpha, std::int64_t e) {
  return int_pow(ExactInt(static_cast<long>(alpha)), static_cast<std::uint64_t>(e));
}

MansourSpec identity_sequences() {
  return {[](std::int64_t i) { return ExactRat(static_cast<long>(i)); },
          [](std::int64_t j) { return ExactRat(static_cast<long>(j)); }};
}

TEST(Tw1, Examples) {
  EXPECT_EQ(tw1(2, 3, 2), 6);
  EXPECT_EQ(tw1(3, 5, 5), 1);
  EXPECT_EQ(tw1(1, 4, 2), 11);
  EXPECT_EQ(tw1(2, 3, 0), 0);
  EXPECT_THROW(tw1(0, 3, 2), InvalidAlpha);
}

TEST(Tw2, Examples) {
  EXPECT_EQ(tw2(2, 3, 2), 6);
  EXPECT_EQ(tw2(1, 4, 2), 7);
  EXPECT_EQ(tw2(5, 1, 1), 1);
  EXPECT_THROW(tw2(-1, 3, 2), InvalidAlpha);
}

TEST(Tw2, ExplicitFormulaAgrees) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 10; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) EXPECT_EQ(tw2(a, n, k), tw2_explicit(a, n, k));
    }
  }
}

TEST(Twl, Examples) {
  for (auto m : kAllMethods) {
    EXPECT_EQ(twl(2, 3, 2, m), 12);
    EXPECT_EQ(twl(3, 4, 4, m), 1);
    EXPECT_EQ(twl(3, 2, 1, m), 6);
    EXPECT_EQ(twl(2, 0, 0, m), 1);
    EXPECT_EQ(twl(2, 3, 0, m), 0);
    EXPECT_EQ(twl(2, 3, 4, m), 0);
    EXPECT_THROW(twl(0, 3, 2, m), InvalidAlpha);
  }
}

TEST(MansourU, Examples) {
  const auto spec = identity_sequences();
  EXPECT_EQ(mansour_u(spec, 1, 1, MansourRoute::recurrence), 1);
  EXPECT_EQ(mansour_u(spec, 1, 1, MansourRoute::explicit_sum), 1);
  EXPECT_EQ(mansour_u(spec, 3, 1, MansourRoute::recurrence), 6);
  EXPECT_EQ(mansour_u(spec, 3, 1, MansourRoute::explicit_sum), 6);
  EXPECT_EQ(mansour_u(spec, 3, 1, MansourRoute::explicit_as_printed), -6);
  EXPECT_EQ(mansour_u(spec, 0, 0), 1);
  EXPECT_EQ(mansour_u(spec, 0, 2), 0);
}

TEST(MansourU, WhitneyLahInstance) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    const auto spec = MansourSpec::whitney_lah(a);
    for (std::int64_t n = 0; n <= 8; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        EXPECT_EQ(mansour_u(spec, n, k, MansourRoute::recurrence), ExactRat(twl(a, n, k)));
        EXPECT_EQ(mansour_u(spec, n, k, MansourRoute::explicit_sum), ExactRat(twl(a, n, k)));
      }
    }
  }
}

TEST(MansourU, DuplicateBValues) {
  const MansourSpec spec{[](std::int64_t) { return ExactRat(1); },
                         [](std::int64_t j) { return ExactRat(j == 2 ? 0L : static_cast<long>(j)); }};
  EXPECT_THROW(mansour_u(spec, 3, 2, MansourRoute::explicit_sum), DuplicateBValues);
  EXPECT_NO_THROW(mansour_u(spec, 3, 2, MansourRoute::recurrence));
}

TEST(Dowling, Examples) {
  EXPECT_EQ(dowling(1, 3), 5);
  EXPECT_EQ(dowling(2, 3), 11);
  EXPECT_EQ(dowling(3, 0), 1);
  EXPECT_THROW(dowling(0, 3), InvalidAlpha);
}

TEST(DowlingDobinski, Examples) {
  EXPECT_NEAR(dowling_dobinski(1, 3, 1e-12, 200), 5.0, 1e-9);
  EXPECT_NEAR(dowling_dobinski(2, 3, 1e-12, 200), 11.0, 1e-9);
  for (std::int64_t a = 1; a <= 3; ++a) EXPECT_NEAR(dowling_dobinski(a, 0, 1e-12, 200), 1.0, 1e-12);
}

TEST(DowlingDobinski, Errors) {
  EXPECT_THROW(dowling_dobinski(1, 10, 1e-12, 3), NoConvergence);
  EXPECT_THROW(dowling_dobinski(0, 3, 1e-12, 200), InvalidAlpha);
  EXPECT_THROW(dowling_dobinski(1, 3, 0.0, 200), InvalidRange);
}

TEST(DowlingQi, Examples) {
  EXPECT_EQ(dowling_qi(1, 2), 2);
  EXPECT_EQ(dowling_qi(2, 2), 3);
  for (std::int64_t n = 0; n <= 12; ++n) EXPECT_EQ(dowling_qi(1, n), bell(n));
}

TEST(WhitneyProperty, ScalingLaws) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const ExactInt s = alpha_pow(a, n - k);
        EXPECT_EQ(tw1(a, n, k), s * stirling1u(n, k));
        EXPECT_EQ(tw2(a, n, k), s * stirling2(n, k));
        EXPECT_EQ(twl(a, n, k), s * lah(n, k));
      }
    }
  }
}

TEST(WhitneyProperty, FourRouteAgreement) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const ExactInt base = twl(a, n, k, TwlMethod::recurrence);
        for (auto m : kAllMethods) EXPECT_EQ(twl(a, n, k, m), base);
      }
    }
  }
}

TEST(WhitneyProperty, HorizontalGeneratingFunctions) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 10; ++n) {
      LaurentPoly first, second, third;
      for (std::int64_t k = 0; k <= n; ++k) {
        first += tw1(a, n, k) * LaurentPoly::power(k);
        second += tw2(a, n, k) * generalized_falling_poly(k, a);
        third += twl(a, n, k) * generalized_falling_poly(k, a);
      }
      EXPECT_EQ(generalized_falling_poly(n, -a), first);
      EXPECT_EQ(LaurentPoly::power(n), second);
      EXPECT_EQ(generalized_falling_poly(n, -a), third);
    }
  }
}

TEST(WhitneyProperty, SumOfProducts) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      for (std::int64_t j = 0; j <= n; ++j) {
        ExactInt sum = 0;
        for (std::int64_t k = j; k <= n; ++k) sum += tw1(a, n, k) * tw2(a, k, j);
        EXPECT_EQ(twl(a, n, j), sum);
      }
    }
  }
}

TEST(WhitneyProperty, Orthogonality) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n < 10; ++n) {
      for (std::int64_t m = 0; m < 10; ++m) {
        ExactInt ab = 0, ba = 0;
        for (std::int64_t j = 0; j < 10; ++j) {
          const int sign_nj = (n - j) % 2 == 0 ? 1 : -1;
          const int sign_jm = (j - m) % 2 == 0 ? 1 : -1;
          ab += sign_nj * tw2(a, n, j) * tw1(a, j, m);
          ba += sign_jm * tw1(a, n, j) * tw2(a, j, m);
        }
        EXPECT_EQ(ab, n == m ? 1 : 0);
        EXPECT_EQ(ba, n == m ? 1 : 0);
      }
    }
  }
}

TEST(WhitneyProperty, AlternatingFactorialSum) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t k = 2; k <= 8; ++k) {
      for (std::int64_t n = k - 1; n <= 12; ++n) {
        ExactInt lhs = 0;
        for (std::int64_t j = 1; j <= k; ++j) {
          const ExactInt s = (j % 2 == 0 ? 1 : -1) * alpha_pow(a, j);
          lhs += s * twl(a, k, j) * factorial(n + j);
        }
        const ExactInt rhs = (k % 2 == 0 ? 1 : -1) * alpha_pow(a, k) * factorial(n) *
                             factorial(n + 1) / factorial(n - k + 1);
        EXPECT_EQ(lhs, rhs) << a << "," << k << "," << n;
      }
    }
  }
}

TEST(WhitneyProperty, BinomialIdentity) {
  for (std::int64_t l = 0; l <= 8; ++l) {
    for (std::int64_t m = -2; m <= 2; ++m) {
      for (std::int64_t s = 0; s <= 8; ++s) {
        for (std::int64_t n = 0; n <= 8; ++n) {
          ExactInt lhs = 0;
          for (std::int64_t j = -m; j <= l - m; ++j) {
            lhs += (j % 2 == 0 ? 1 : -1) * binomial(l, m + j) * binomial(s + j, n);
          }
          const ExactInt rhs = ((l + m) % 2 == 0 ? 1 : -1) * binomial(s - m, n - l);
          EXPECT_EQ(lhs, rhs) << l << "," << m << "," << s << "," << n;
        }
      }
    }
  }
}

TEST(WhitneyProperty, ExponentialGeneratingFunction) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t k = 0; k <= 6; ++k) {
      const auto series = twl_egf_series(a, k, 12);
      for (std::int64_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(series[static_cast<std::size_t>(n)], make_rat(twl(a, n, k), factorial(n)));
      }
    }
  }
}

TEST(WhitneyProperty, QiFormulaMatchesDowling) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 12; ++n) EXPECT_EQ(dowling_qi(a, n), dowling(a, n));
  }
}

TEST(WhitneyProperty, DobinskiRelativeError) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    for (std::int64_t n = 0; n <= 10; ++n) {
      const double exact = dowling(a, n).get_d();
      EXPECT_LT(std::fabs(dowling_dobinski(a, n, 1e-12, 200) - exact) / exact, 1e-9);
    }
  }
}

TEST(WhitneyTable, ConcurrentReadersSeeSameValues) {
  std::vector<ExactInt> results(8);
  {
    std::vector<std::jthread> threads;
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back([&results, i] {
        const auto table = whitney_table(WhitneyFamily::twl, 5, 20 + i);
        results[static_cast<std::size_t>(i)] = table->at(20, 10);
      });
    }
  }
  for (const auto& r : results) EXPECT_EQ(r, twl(5, 20, 10, TwlMethod::product));
}

TEST(WhitneyTriangle, Boundaries) {
  for (auto family : {WhitneyFamily::tw1, WhitneyFamily::tw2, WhitneyFamily::twl}) {
    const auto t = whitney_triangle(family, 2, 8);
    EXPECT_EQ(t.at(0, 0), 1);
    for (int n = 1; n <= 8; ++n) {
      EXPECT_EQ(t.at(n, 0), 0);
      EXPECT_EQ(t.at(n, n), 1);
      for (int k = 0; k <= n; ++k) EXPECT_GE(t.at(n, k), 0);
    }
  }
}

}  // namespace
}  // namespace lahq
