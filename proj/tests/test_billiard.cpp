#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ergodir/billiard.hpp"

using namespace ergodir;

TEST(Billiard, RoundTripExample) {
  const double th = 30.0 * M_PI / 180.0;
  const BilliardState<double> s{0.3, 0.1, std::cos(th), std::sin(th)};
  const auto c = billiard_to_cover(s, 0.25);
  EXPECT_EQ(c.state.sheet, 0);
  const auto back = cover_to_billiard(c, 0.25);
  EXPECT_NEAR(back.x, s.x, 1e-12);
  EXPECT_NEAR(back.y, s.y, 1e-12);
  EXPECT_NEAR(back.cx, s.cx, 1e-12);
  EXPECT_NEAR(back.cy, s.cy, 1e-12);
}

TEST(Billiard, RoundTripRandomStates) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> xs(-20, 20), ys(0, 0.5), ang(0, 2 * M_PI);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const double th = ang(rng);
    BilliardState<double> s{xs(rng), ys(rng), std::cos(th), std::sin(th)};
    if (s.x == std::floor(s.x) && s.y <= 0.25) continue;
    const auto back = cover_to_billiard(billiard_to_cover(s, 0.25), 0.25);
    if (std::abs(back.x - s.x) > 1e-9 || std::abs(back.y - s.y) > 1e-12 ||
        std::abs(back.cx - s.cx) > 1e-12 || std::abs(back.cy - s.cy) > 1e-12) {
      ++failures;
    }
  }
  EXPECT_EQ(failures, 0);
}

TEST(Billiard, ExactRoundTrip) {
  const BilliardState<BigRat> s{BigRat(-17, 5), BigRat(1, 2), BigRat(-3), BigRat(1, 7)};
  const auto back = cover_to_billiard(billiard_to_cover(s, BigRat(1, 4)), BigRat(1, 4));
  EXPECT_EQ(back.x, s.x);
  EXPECT_EQ(back.y, s.y);
  EXPECT_EQ(back.cx, s.cx);
  EXPECT_EQ(back.cy, -s.cy);  // pointing out of the top wall, so reflected first
}

TEST(Billiard, Errors) {
  EXPECT_THROW(billiard_to_cover(BilliardState<double>{0.0, 0.1, 1, 0}, 0.25), BilliardError);
  EXPECT_THROW(billiard_to_cover(BilliardState<double>{0.3, 0.6, 1, 0}, 0.25), BilliardError);
  EXPECT_THROW(billiard_to_cover(BilliardState<double>{0.3, 0.1, 0, 0}, 0.25), BilliardError);
  EXPECT_THROW(billiard_to_cover(BilliardState<double>{0.3, 0.1, 1, 0}, 0.5), BilliardError);
  EXPECT_NO_THROW(billiard_to_cover(BilliardState<double>{0.0, 0.3, 1, 0}, 0.25));
}

TEST(Billiard, TopWallReflection) {
  const BilliardState<BigRat> s{BigRat(3, 10), BigRat(2, 5), BigRat(0), BigRat(1)};
  const auto r = billiard_advance(s, BigRat(1, 4), BigRat(1, 5));
  EXPECT_EQ(r.state.y, BigRat(2, 5));
  EXPECT_EQ(r.state.cy, BigRat(-1));
  EXPECT_EQ(r.events, 1u);
}

TEST(Billiard, BarrierReflection) {
  const BilliardState<BigRat> s{BigRat(3, 4), BigRat(1, 10), BigRat(1), BigRat(0)};
  const auto r = billiard_advance(s, BigRat(1, 4), BigRat(1, 2));
  EXPECT_EQ(r.state.x, BigRat(3, 4));
  EXPECT_EQ(r.state.cx, BigRat(-1));
  EXPECT_FALSE(r.singular);
}

TEST(Billiard, ModelsAgreeOnRandomRationalStates) {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<long> num(-200, 200), yn(1, 49), vel(-5, 5);
  int mismatches = 0;
  for (int i = 0; i < 300; ++i) {
    BilliardState<BigRat> s{BigRat(num(rng), 37), BigRat(yn(rng), 100), BigRat(vel(rng)),
                            BigRat(vel(rng), 3)};
    s.x.canonicalize();
    s.cy.canonicalize();
    if (s.cx == 0 && s.cy == 0) continue;
    if (s.x.get_den() == 1 && s.y <= BigRat(1, 4)) continue;  // on a barrier
    const BigRat t(num(rng) + 201, 13);
    const auto a = billiard_advance(s, BigRat(1, 4), t);
    const auto b = cover_advance(s, BigRat(1, 4), t);
    if (a.singular != b.singular) {
      ++mismatches;
      continue;
    }
    if (a.singular) continue;
    if (a.state.x != b.state.x || a.state.y != b.state.y || a.state.cx != b.state.cx ||
        a.state.cy != b.state.cy) {
      ++mismatches;
    }
  }
  EXPECT_EQ(mismatches, 0);
}
