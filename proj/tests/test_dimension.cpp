#include <gtest/gtest.h>

#include "ergodir/dimension.hpp"

using namespace ergodir;

TEST(Dimension, Continuants) {
  const auto c = block_continuants({1, 1, 1});
  EXPECT_EQ(c.q_m, 3);
  EXPECT_EQ(c.q_m1, 2);
  const auto b = block_continuants({5, 1, 1, 7, 1, 1, 2});
  EXPECT_EQ(b.q_m, 448);
  EXPECT_EQ(b.q_m1, 177);
}

TEST(Dimension, ContractionBounds) {
  EXPECT_EQ(contraction_bound({1, 1, 1}, 1), ExactScalar::rational(1, 64));
  EXPECT_EQ(contraction_bound({5, 1, 1, 7, 1, 1, 2}, 1), ExactScalar::rational(1, 1073 * 1073));
}

TEST(Dimension, ProblemValidation) {
  EXPECT_THROW((DimensionProblem{{1, 1}, 1, 0, 4}).validate(), std::invalid_argument);
  EXPECT_THROW((DimensionProblem{{1, 0, 1}, 1, 0, 4}).validate(), std::invalid_argument);
  EXPECT_THROW((DimensionProblem{{1, 1, 1}, 0, 0, 4}).validate(), std::invalid_argument);
  EXPECT_NO_THROW((DimensionProblem{{1, 1, 1}, 1, 0, 4}).validate());
}

TEST(Dimension, HalfPowerSumCrossesOneAt42) {
  // Σ_{l<=u} 1/(3l+5) first exceeds 1 at u = 42.
  const auto below = half_power_sum({{1, 1, 1}, 1, 0, 41});
  const auto above = half_power_sum({{1, 1, 1}, 1, 0, 42});
  ASSERT_TRUE(below.exact && above.exact);
  EXPECT_LT(*below.exact, 1);
  EXPECT_GT(*above.exact, 1);
  EXPECT_TRUE(above.certainly_above_one);
  EXPECT_FALSE(below.certainly_above_one);
}

TEST(Dimension, IntervalSumPastExactLimit) {
  const auto s = half_power_sum({{1, 1, 1}, 1, 0, 100}, 10);
  EXPECT_FALSE(s.exact.has_value());
  const auto e = half_power_sum({{1, 1, 1}, 1, 0, 100});
  ASSERT_TRUE(e.exact.has_value());
  const double v = e.exact->get_d();
  EXPECT_TRUE(s.enclosure.certainly_le(v + 1e-12));
  EXPECT_TRUE(s.enclosure.certainly_ge(v - 1e-12));
  EXPECT_LT(s.enclosure.width(), 1e-20);
}

TEST(Dimension, SolveSuToyBlock) {
  const auto r = solve_su({{1, 1, 1}, 1, 0, 64});
  EXPECT_GT(r.s, 0.5L);
  EXPECT_NEAR(static_cast<double>(r.s), 0.51795, 1e-4);
  EXPECT_LE(r.lo, r.s);
  EXPECT_GE(r.hi, r.s);
  EXPECT_LT(std::abs(static_cast<double>(r.residual)), 1e-6);
}

TEST(Dimension, SuGrowsWithU) {
  long double prev = 0;
  for (std::uint64_t u : {2, 4, 8, 16, 32, 64, 128}) {
    const auto r = solve_su({{1, 1, 1}, 1, 0, u});
    EXPECT_GT(r.s, prev) << u;
    prev = r.s;
  }
}

TEST(Dimension, DirectRouteForToyBlock) {
  const auto c = dimension_certificate({1, 1, 1}, 1, 0);
  EXPECT_EQ(c.route, "direct");
  EXPECT_EQ(c.u_used, 64u);  // first power of two past the crossing at 42
  EXPECT_TRUE(c.above_half_certified);
  EXPECT_TRUE(c.s_monotone);
  EXPECT_TRUE(c.nesting.nested);
  EXPECT_TRUE(c.nesting.disjoint);
  EXPECT_GT(c.achieved.s, 0.5L);
}

TEST(Dimension, DivergenceRouteForQuarterBlock) {
  DimensionOptions opts;
  opts.budget_u = 20'000;
  const auto c = dimension_certificate({5, 1, 1, 7, 1, 1, 2}, 1, 0, opts);
  EXPECT_EQ(c.route, "divergence");
  EXPECT_EQ(c.divergence.constant, 1073);
  EXPECT_TRUE(c.divergence.valid());
  EXPECT_TRUE(c.above_half_certified);
  EXPECT_TRUE(c.s_monotone);
  EXPECT_LT(c.achieved.s, 0.5L);
  EXPECT_GT(c.projected_log10_u, 100);
}

TEST(Dimension, DivergenceCertificateTermwise) {
  const auto d = divergence_certificate({{1, 1, 1}, 2, 1, 2}, 5000);
  EXPECT_EQ(d.constant, 3 * 4 + 2);
  EXPECT_TRUE(d.valid());
  EXPECT_EQ(d.checked_up_to, 5000u);
}
