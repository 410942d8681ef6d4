#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gen.hpp"
#include "lahq/arith.hpp"

namespace lahq {
namespace {

using testing::Gen;
using testing::lp;
using Series = TruncSeries<ExactRat>;
using QSeries = TruncSeries<LaurentPoly>;

TEST(ExactRat, ReducedAndPositiveDenominator) {
  const ExactRat r = make_rat(ExactInt(6), ExactInt(-4));
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(make_rat(ExactInt(0), ExactInt(-7))), "0");
  EXPECT_EQ(make_rat(ExactInt(0), ExactInt(-7)).get_den(), 1);
  EXPECT_THROW(make_rat(ExactInt(1), ExactInt(0)), DivisionByZero);
}

TEST(ExactInt, NoOverflow) {
  EXPECT_EQ(to_string(int_pow(ExactInt(2), 100)), "1267650600228229401496703205376");
}

TEST(LaurentPoly, CanonicalText) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(lp({{0, 1}, {1, 1}}).to_string(), "1 + q");
  EXPECT_EQ(lp({{-1, -1}}).to_string(), "-q^-1");
  EXPECT_EQ(lp({{1, 2}, {2, 1}}).to_string(), "2*q + q^2");
  EXPECT_EQ((LaurentPoly(make_rat(ExactInt(1), ExactInt(2))) + LaurentPoly::power(3)).to_string(),
            "1/2 + q^3");
  EXPECT_EQ(lp({{-2, -1}, {-1, -1}}).to_string(), "-q^-2 - q^-1");
  EXPECT_EQ(lp({{0, -1}, {1, -1}}).to_string(), "-1 - q");
  EXPECT_EQ(LaurentPoly::monomial(make_rat(ExactInt(-3), ExactInt(4)), 2).to_string(), "-3/4*q^2");
  EXPECT_EQ(lp({{1, 1}}).to_string("t"), "t");
}

TEST(LaurentPoly, NoZeroCoefficientsStored) {
  LaurentPoly p = lp({{1, 1}, {2, 3}});
  p -= lp({{2, 3}});
  EXPECT_EQ(p.term_count(), 1U);
  EXPECT_EQ(LaurentPoly::monomial(ExactRat(0), 5).term_count(), 0U);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(LpMul, Examples) {
  EXPECT_EQ(lp_mul(lp({{-1, 1}, {0, 1}}), lp({{1, 1}, {0, -1}})), lp({{1, 1}, {-1, -1}}));
  EXPECT_EQ(lp_mul(lp({{-3, 2}, {4, 1}}), LaurentPoly()), LaurentPoly());
  EXPECT_EQ(lp_mul(lp({{0, 1}, {1, 1}}), lp({{0, 1}, {1, 1}, {2, 1}})).to_string(),
            "1 + 2*q + 2*q^2 + q^3");
}

TEST(LpDivExact, Examples) {
  EXPECT_EQ(lp_div_exact(lp({{0, 1}, {2, -1}}), lp({{0, 1}, {1, -1}})), lp({{0, 1}, {1, 1}}));
  EXPECT_EQ(lp_div_exact(lp({{1, 1}, {-1, -1}}), lp({{-1, 1}, {0, 1}})), lp({{1, 1}, {0, -1}}));
  EXPECT_THROW(lp_div_exact(lp({{0, 1}, {2, 1}}), lp({{0, 1}, {1, 1}})), NonExactDivision);
  EXPECT_THROW(lp_div_exact(lp({{0, 1}}), LaurentPoly()), DivisionByZero);
  EXPECT_EQ(lp_div_exact(LaurentPoly(), lp({{3, 2}})), LaurentPoly());
}

TEST(LpDivExact, MonomialDivisorIsShift) {
  EXPECT_EQ(lp_div_exact(lp({{2, 4}, {5, 2}}), lp({{3, 2}})), lp({{-1, 2}, {2, 1}}));
}

TEST(LpDivExact, RemainderOnlyAboveDegreeIsRejected) {
  // 1 + q^3 is not divisible by 1 + q + q^2.
  EXPECT_THROW(lp_div_exact(lp({{0, 1}, {3, 1}}), lp({{0, 1}, {1, 1}, {2, 1}})), NonExactDivision);
}

TEST(LpEvalQ1, Examples) {
  EXPECT_EQ(lp_eval_q1(lp({{1, 2}, {2, 1}})), 3);
  EXPECT_EQ(lp_eval_q1(lp({{-2, -1}, {-1, -1}})), -2);
  EXPECT_EQ(lp_eval_q1(lp({{0, 1}, {1, 1}, {2, 1}, {3, 1}})), 4);
  EXPECT_EQ(lp_eval_q1(LaurentPoly()), 0);
}

TEST(LaurentPoly, ExponentQueries) {
  const LaurentPoly p = lp({{-2, 1}, {4, 3}});
  EXPECT_EQ(p.low_exponent(), -2);
  EXPECT_EQ(p.high_exponent(), 4);
  EXPECT_EQ(p.coefficient(4), 3);
  EXPECT_EQ(p.coefficient(0), 0);
  EXPECT_THROW(LaurentPoly().low_exponent(), InvalidRange);
  EXPECT_EQ(p.substitute_power(2), lp({{-4, 1}, {8, 3}}));
  EXPECT_EQ(p.shifted(2), lp({{0, 1}, {6, 3}}));
}

TEST(LpPow, SmallCases) {
  EXPECT_EQ(lp_pow(lp({{0, 1}, {1, 1}}), 0), LaurentPoly(1));
  EXPECT_EQ(lp_pow(lp({{0, 1}, {1, 1}}), 3).to_string(), "1 + 3*q + 3*q^2 + q^3");
  EXPECT_EQ(lp_pow(lp({{-1, 1}}), 4), lp({{-4, 1}}));
}

TEST(TsInverse, Examples) {
  const Series one_minus_t(3, {ExactRat(1), ExactRat(-1)});
  EXPECT_EQ(ts_inverse(one_minus_t).coeffs(), std::vector<ExactRat>(4, ExactRat(1)));
  EXPECT_EQ(ts_inverse(Series::one(5)), Series::one(5));

  const QSeries one_minus_qt(2, {LaurentPoly(1), lp({{1, -1}})});
  const QSeries inv = ts_inverse(one_minus_qt);
  EXPECT_EQ(inv[0].to_string(), "1");
  EXPECT_EQ(inv[1].to_string(), "q");
  EXPECT_EQ(inv[2].to_string(), "q^2");
}

TEST(TsInverse, NonInvertibleConstant) {
  EXPECT_THROW(ts_inverse(Series(3, {ExactRat(0), ExactRat(1)})), NonInvertibleConstantTerm);
  EXPECT_THROW(ts_inverse(QSeries(3, {lp({{0, 1}, {1, 1}})})), NonInvertibleConstantTerm);
}

TEST(TsInverse, MonomialConstantIsUnit) {
  const QSeries s(3, {lp({{2, 3}}), lp({{0, 1}})});
  EXPECT_EQ(s * ts_inverse(s), QSeries::one(3));
}

TEST(TsPow, Examples) {
  const Series t = Series::term(4, ExactRat(1), 1);
  EXPECT_EQ(ts_pow(t, 2), Series::term(4, ExactRat(1), 2));
  const Series one_plus_t(4, {ExactRat(1), ExactRat(1)});
  EXPECT_EQ(ts_pow(one_plus_t, 2).coeffs(),
            (std::vector<ExactRat>{ExactRat(1), ExactRat(2), ExactRat(1), ExactRat(0), ExactRat(0)}));
  const Series t_plus_t2(3, {ExactRat(0), ExactRat(1), ExactRat(1)});
  EXPECT_EQ(ts_pow(t_plus_t2, 2).coeffs(),
            (std::vector<ExactRat>{ExactRat(0), ExactRat(0), ExactRat(1), ExactRat(2)}));
  EXPECT_EQ(ts_pow(t_plus_t2, 0), Series::one(3));
}

TEST(TruncSeries, MixedOrdersTakeMinimum) {
  const Series a = Series::one(5);
  const Series b = Series::one(2);
  EXPECT_EQ((a + b).order(), 2U);
  EXPECT_EQ((a * b).order(), 2U);
  EXPECT_EQ((b - a).order(), 2U);
}

TEST(ArithProperty, RingAxioms) {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ(a * LaurentPoly(1), a);
  }
}

TEST(ArithProperty, DivisionUndoesMultiplication) {
  Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = gen.poly(5, 6);
    const LaurentPoly b = gen.nonzero_poly(4, 5);
    EXPECT_EQ(lp_div_exact(lp_mul(a, b), b), a);
  }
}

TEST(ArithProperty, EvalAtOneIsHomomorphism) {
  Gen gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = gen.poly(), b = gen.poly();
    EXPECT_EQ(lp_eval_q1(a * b), lp_eval_q1(a) * lp_eval_q1(b));
    EXPECT_EQ(lp_eval_q1(a + b), lp_eval_q1(a) + lp_eval_q1(b));
  }
}

TEST(ArithProperty, SeriesInverseRoundTrip) {
  Gen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto order = static_cast<std::size_t>(gen.uniform(0, 7));
    std::vector<ExactRat> rc;
    std::vector<LaurentPoly> qc;
    ExactRat c0 = gen.rational();
    while (c0 == 0) c0 = gen.rational();
    rc.push_back(c0);
    qc.push_back(LaurentPoly::monomial(c0, gen.uniform(-3, 3)));
    for (std::size_t i = 1; i <= order; ++i) {
      rc.push_back(gen.rational());
      qc.push_back(gen.poly(3, 3));
    }
    const Series s(order, rc);
    EXPECT_EQ(s * ts_inverse(s), Series::one(order));
    const QSeries qs(order, qc);
    EXPECT_EQ(qs * ts_inverse(qs), QSeries::one(order));
  }
}

TEST(ArithProperty, CanonicalFormIndependentOfConstructionOrder) {
  Gen gen(15);
  std::mt19937_64 shuffle_rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LaurentPoly> pieces;
    const std::int64_t count = gen.uniform(1, 6);
    for (std::int64_t i = 0; i < count; ++i) pieces.push_back(gen.poly(3, 3));
    LaurentPoly forward;
    for (const auto& p : pieces) forward += p;
    std::shuffle(pieces.begin(), pieces.end(), shuffle_rng);
    LaurentPoly shuffled;
    for (const auto& p : pieces) shuffled += p;
    EXPECT_EQ(forward.terms(), shuffled.terms());
    EXPECT_EQ(forward.to_string(), shuffled.to_string());
  }
}

}  // namespace
}  // namespace lahq
