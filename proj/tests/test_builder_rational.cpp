#include <gtest/gtest.h>

#include "ergodir/builder_rational.hpp"
#include "ergodir/direction_spec.hpp"

using namespace ergodir;

namespace {

RationalParam lam(long p, long q) { return RationalParam::from_lambda(BigRat(p, q)); }

}  // namespace

TEST(RationalParam, FromLambda) {
  EXPECT_EQ(lam(1, 4), (RationalParam{0, 1, 2}));
  EXPECT_EQ(lam(1, 6), (RationalParam{0, 1, 3}));
  EXPECT_EQ(lam(1, 3), (RationalParam{0, 2, 3}));
  EXPECT_EQ(lam(1, 4).point(), TorusPoint(ExactScalar(0L), ExactScalar::rational(1, 4)));
  EXPECT_THROW(lam(3, 4), std::invalid_argument);
  EXPECT_THROW(lam(1, 2), std::invalid_argument);
  EXPECT_THROW(lam(0, 1), std::invalid_argument);
}

TEST(RationalParam, Validate) {
  EXPECT_NO_THROW((RationalParam{1, 1, 2}).validate());
  EXPECT_THROW((RationalParam{0, 0, 3}).validate(), std::invalid_argument);
  EXPECT_THROW((RationalParam{0, 2, 4}).validate(), std::invalid_argument);
  EXPECT_THROW((RationalParam{3, 1, 3}).validate(), std::invalid_argument);
  EXPECT_THROW((RationalParam{0, 1, 1}).validate(), std::invalid_argument);
}

TEST(Congruences, Examples) {
  auto c = solve_congruences({0, 1, 2});
  EXPECT_EQ(c.a, 2);
  EXPECT_EQ(c.b, 1);
  EXPECT_EQ(c.parity, ParityCase::Odd);
  c = solve_congruences({1, 1, 2});
  EXPECT_EQ(c.a, 1);
  EXPECT_EQ(c.b, 2);
  c = solve_congruences({0, 2, 3});
  EXPECT_EQ(c.a, 1);
  EXPECT_EQ(c.b, 2);
  EXPECT_EQ(c.a2, 1);
  EXPECT_EQ(c.parity, ParityCase::Even);
}

TEST(Blocks, KnownLambdas) {
  EXPECT_EQ(block_for(lam(1, 4)), (Block{5, 1, 1, 7, 1, 1, 2}));
  EXPECT_EQ(block_for(lam(1, 6)), (Block{8, 1, 1, 11, 1, 1, 3}));
  EXPECT_EQ(block_for(lam(1, 3)), (Block{7, 1, 3, 8, 1, 3, 1}));
}

TEST(Blocks, OddRowForUnitNumerator) {
  // λ = 1/2q with q odd or even gives (3q−1, 1, 1, 4q−1, 1, 1, q).
  for (long q = 2; q <= 40; ++q) {
    const auto b = block_for(lam(1, 2 * q));
    const auto uq = static_cast<std::uint64_t>(q);
    EXPECT_EQ(b, (Block{3 * uq - 1, 1, 1, 4 * uq - 1, 1, 1, uq})) << q;
  }
}

TEST(FixingWord, CertifiesKnownLambdas) {
  for (const auto& p : {lam(1, 4), lam(1, 6), lam(1, 3)}) {
    const auto cert = certify_fixing(p);
    EXPECT_TRUE(cert.fixes_point) << p.str();
    EXPECT_TRUE(cert.action_is_identity) << p.str();
    EXPECT_TRUE(cert.ok()) << p.str();
  }
  EXPECT_EQ(fixing_word(lam(1, 4)).length(), 18u);
}

TEST(FixingWord, NegativeSIsReduced) {
  const auto cert = certify_fixing({1, -1, 2});
  EXPECT_TRUE(cert.ok());
  EXPECT_EQ(cert.certified_point.y(), ExactScalar::rational(1, 4));
}

TEST(FixingWord, AllSmallParams) {
  std::size_t count = 0;
  for (long q = 2; q <= 12; ++q) {
    for (long r = -q + 1; r < q; ++r) {
      for (long s = -q + 1; s < q; ++s) {
        const RationalParam p{r, s, q};
        try {
          p.validate();
        } catch (const std::invalid_argument&) {
          continue;
        }
        const auto cert = certify_fixing(p);
        EXPECT_TRUE(cert.fixes_point && cert.action_is_identity) << p.str();
        ++count;
      }
    }
  }
  EXPECT_GT(count, 500u);
}

TEST(Stream, DigitsForQuarter) {
  const auto spec = direction_stream(lam(1, 4), NkRule::constant(1));
  EXPECT_EQ(spec.prefix(16), (std::vector<std::uint64_t>{5, 1, 1, 7, 1, 1, 2, 1,
                                                         5, 1, 1, 7, 1, 1, 2, 1}));
  EXPECT_EQ(spec.block(3).z_out, spec.z0());
}

TEST(Stream, NonzeroRNeedsMultiplesOfTwoQ) {
  EXPECT_THROW(direction_stream({1, 1, 3}, NkRule::constant(3)), std::invalid_argument);
  EXPECT_NO_THROW(direction_stream({1, 1, 3}, NkRule::constant(6)));
  EXPECT_THROW(direction_stream({1, 1, 3}, NkRule::from_list({6, 5})), std::invalid_argument);
}

TEST(Stream, ArithmeticRule) {
  const auto spec = direction_stream(lam(1, 6), NkRule::arithmetic(6, 0));
  EXPECT_EQ(spec.digit(8), 6u);
  EXPECT_EQ(spec.digit(16), 12u);
  EXPECT_EQ(spec.digit(9), 8u);
}

TEST(NkRule, ParseAndFormat) {
  EXPECT_EQ(NkRule::parse("const:4").at(7), 4u);
  EXPECT_EQ(NkRule::parse("arith:2,1").at(3), 7u);
  const auto l = NkRule::parse("list:3,4");
  EXPECT_EQ(l.at(2), 4u);
  EXPECT_FALSE(l.at(3).has_value());
  EXPECT_EQ(NkRule::parse(l.str()).list, l.list);
  EXPECT_THROW(NkRule::parse("const:0"), std::invalid_argument);
  EXPECT_THROW(NkRule::parse("geom:2"), std::invalid_argument);
}

TEST(Stream, FiniteListRunsOut) {
  const auto spec = direction_stream(lam(1, 4), NkRule::from_list({1, 2}));
  EXPECT_EQ(spec.digit(16), 2u);
  EXPECT_THROW(spec.digit(17), StreamExhausted);
}
