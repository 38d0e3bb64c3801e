#include <gtest/gtest.h>

#include <random>

#include "ergodir/builder_rational.hpp"
#include "ergodir/torus_action.hpp"

using namespace ergodir;

namespace {

TorusPoint pt(long xn, long xd, long yn, long yd) {
  return TorusPoint(ExactScalar::rational(xn, xd), ExactScalar::rational(yn, yd));
}

// Random rational point of T²₀ with denominator up to 40, or a point with
// √3 coordinates.
TorusPoint random_point(std::mt19937_64& rng, bool irrational) {
  std::uniform_int_distribution<long> den(2, 40);
  for (;;) {
    ExactScalar x, y;
    if (irrational) {
      std::uniform_int_distribution<long> c(-30, 30);
      x = ExactScalar::quadratic(BigInt(c(rng)), BigInt(c(rng)), BigInt(den(rng)), 3);
      y = ExactScalar::quadratic(BigInt(c(rng)), BigInt(c(rng)), BigInt(den(rng)), 3);
    } else {
      const long n = den(rng);
      std::uniform_int_distribution<long> num(-n, n);
      x = ExactScalar::rational(num(rng), 2 * n);
      y = ExactScalar::rational(num(rng), 2 * n);
    }
    x = mod_half_open(x);
    y = mod_half_open(y);
    if (!is_excluded_point(x, y)) return TorusPoint(x, y);
  }
}

GenWord random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<std::uint64_t> e(1, 9);
  std::uniform_int_distribution<int> first(0, 1);
  std::vector<std::uint64_t> d(static_cast<std::size_t>(len(rng)));
  for (auto& x : d) x = e(rng);
  return GenWord::from_digits(d, first(rng) ? Generator::HPlus : Generator::HMinus);
}

GenWord conjugate_theta(const GenWord& w) {
  GenWord out;
  for (const auto& s : w.syllables()) out.append(other(s.gen), s.exponent);
  return out;
}

}  // namespace

TEST(TorusPoint, RejectsExcludedAndOutOfRange) {
  EXPECT_THROW(pt(0, 1, 0, 1), std::invalid_argument);
  EXPECT_THROW(pt(-1, 2, -1, 2), std::invalid_argument);
  EXPECT_THROW(pt(-1, 2, 0, 1), std::invalid_argument);
  EXPECT_THROW(pt(0, 1, -1, 2), std::invalid_argument);
  EXPECT_THROW(pt(1, 2, 1, 4), std::invalid_argument);
  EXPECT_NO_THROW(pt(-1, 2, 1, 4));
  EXPECT_EQ(TorusPoint::parse("0,1/4"), pt(0, 1, 1, 4));
  EXPECT_EQ(TorusPoint::parse("0;0,1,4,2").y(), ExactScalar::quadratic(0, 1, 4, 2));
}

TEST(Regions, SAndE) {
  EXPECT_TRUE(in_region_S(pt(0, 1, 1, 4)));
  EXPECT_FALSE(in_region_S(pt(1, 4, 1, 4)));
  // (−1/2 + ε₁, y − 1/2 − ε₁) with y = 1/4, ε₁ = 1/16
  EXPECT_FALSE(in_region_S(pt(-7, 16, -5, 16)));
  EXPECT_TRUE(in_region_E(pt(0, 1, 1, 4)));
  EXPECT_FALSE(in_region_E(pt(-1, 2, 1, 4)));
  EXPECT_TRUE(in_region_E(pt(-1, 4, -1, 4)));
}

TEST(GeneratorInverse, Examples) {
  EXPECT_EQ(apply_generator_inverse(pt(0, 1, 1, 4), Generator::HPlus, 1), pt(-1, 4, 1, 4));
  EXPECT_EQ(apply_generator_inverse(pt(0, 1, 1, 4), Generator::HPlus, 2), pt(-1, 2, 1, 4));
  EXPECT_EQ(apply_generator_inverse(pt(-1, 4, 1, 4), Generator::HMinus, 1), pt(-1, 4, -1, 2));
}

TEST(HomologyFactor, Examples) {
  EXPECT_EQ(generator_homology_factor(pt(0, 1, 1, 4), Generator::HPlus), mat::h_plus());
  EXPECT_EQ(generator_homology_factor(pt(1, 4, 1, 4), Generator::HPlus), mat::h_plus().inverse());
  EXPECT_EQ(generator_homology_factor(pt(0, 1, 1, 4), Generator::HMinus), mat::h_minus());
}

TEST(TraceWord, ThreeHPlusSteps) {
  const auto t = trace_word(pt(0, 1, 1, 4), GenWord::parse("h+:3"));
  ASSERT_EQ(t.points.size(), 3u);
  EXPECT_EQ(t.points[0], pt(-1, 4, 1, 4));
  EXPECT_EQ(t.points[1], pt(-1, 2, 1, 4));
  EXPECT_EQ(t.points[2], pt(1, 4, 1, 4));
  EXPECT_EQ(t.end, pt(1, 4, 1, 4));
  EXPECT_EQ(t.action.matrix(), mat::h_plus());
}

TEST(TraceWord, FixingWordOfQuarter) {
  const auto word = fixing_word(RationalParam::from_lambda(BigRat(1, 4)));
  const auto t = trace_word(pt(0, 1, 1, 4), word);
  EXPECT_EQ(t.end, pt(0, 1, 1, 4));
  EXPECT_TRUE(t.action.is_identity());
  // The word matrix maps (0, 1/4) to (112, 81/4), which is (0, 1/4) mod 1.
  const IntMat2 g = word_matrix(word);
  EXPECT_EQ(g.b, 448);
  EXPECT_EQ(g.d, 81);
  EXPECT_EQ(apply_matrix(g, pt(0, 1, 1, 4)), pt(0, 1, 1, 4));
}

TEST(TraceWord, EmptyWord) {
  const auto t = trace_word(pt(0, 1, 1, 4), GenWord{});
  EXPECT_TRUE(t.points.empty());
  EXPECT_TRUE(t.action.is_identity());
  EXPECT_EQ(t.end, pt(0, 1, 1, 4));
}

TEST(MSequence, Examples) {
  EXPECT_EQ(m_sequence(pt(0, 1, 1, 4), Generator::HPlus, 3), (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(m_sequence(pt(0, 1, 1, 4), Generator::HPlus, 1), (std::vector<long>{1}));
}

TEST(MSequence, StepsByOne) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto z = random_point(rng, i % 2 == 1);
    const auto m = m_sequence(z, i % 3 ? Generator::HPlus : Generator::HMinus, 40);
    long prev = 0;
    for (long v : m) {
      EXPECT_EQ(std::labs(v - prev), 1);
      prev = v;
    }
  }
}

TEST(Involutions, Examples) {
  EXPECT_EQ(involution_theta(pt(0, 1, 1, 4)), pt(1, 4, 0, 1));
  EXPECT_EQ(involution_theta_action().matrix(), IntMat2::of(0, 1, 1, 0));
  EXPECT_EQ(involution_minus_id(pt(0, 1, 1, 4)), pt(0, 1, -1, 4));
  EXPECT_EQ(involution_minus_id(pt(-1, 2, 1, 4)), pt(-1, 2, -1, 4));
  const auto m = involution_minus_id(pt(1, 4, 1, 4));
  EXPECT_EQ(m, pt(-1, 4, -1, 4));
  EXPECT_TRUE(in_region_E(m));
}

// Composition: (gh)_*(z) = g_*(z) · h_*(g⁻¹z).
TEST(HomologyProperties, CompositionLaw) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    const auto z = random_point(rng, i % 4 == 0);
    const GenWord g = random_word(rng);
    const GenWord h = random_word(rng);
    GenWord gh = g;
    gh.append(h);
    const auto tg = trace_word(z, g, false);
    const auto th = trace_word(tg.end, h, false);
    const auto tgh = trace_word(z, gh, false);
    EXPECT_EQ(tgh.end, th.end);
    EXPECT_EQ(tgh.action, HomologyAction(tg.raw_action * th.raw_action));
  }
}

// ϑ-conjugation: swapping generators and coordinates conjugates the action by ϑ.
TEST(HomologyProperties, ThetaConjugation) {
  std::mt19937_64 rng(202);
  const IntMat2 th = IntMat2::of(0, 1, 1, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto z = random_point(rng, i % 4 == 0);
    const GenWord g = random_word(rng);
    const auto t = trace_word(z, g, false);
    const auto tc = trace_word(involution_theta(z), conjugate_theta(g), false);
    EXPECT_EQ(tc.end, involution_theta(t.end));
    EXPECT_EQ(tc.action, HomologyAction(th * t.raw_action * th));
  }
}

// −id symmetry: when the whole orbit of z stays in E, the trace from −z is the
// image of the trace from z with the same action.
bool orbit_in_E(const ActionTrace& t) {
  if (!in_region_E(t.start)) return false;
  for (const auto& p : t.points) {
    if (!in_region_E(p)) return false;
  }
  return true;
}

TEST(HomologyProperties, MinusIdSymmetry) {
  std::mt19937_64 rng(303);
  int accepted = 0;
  for (int i = 0; accepted < 1000 && i < 200000; ++i) {
    const auto z = random_point(rng, i % 4 == 0);
    const GenWord g = random_word(rng);
    const auto t = trace_word(z, g);
    if (!orbit_in_E(t)) continue;
    ++accepted;
    const auto tm = trace_word(involution_minus_id(z), g, false);
    EXPECT_EQ(tm.end, involution_minus_id(t.end));
    EXPECT_EQ(tm.action, t.action) << z << " " << g.str();
  }
  EXPECT_EQ(accepted, 1000);
}

TEST(HomologyProperties, GridPathMatchesGenericPath) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 1000; ++i) {
    const auto z = random_point(rng, false);
    const GenWord g = random_word(rng);
    TraceCursor fast(z, true);
    TraceCursor slow(z, false);
    fast.run(g);
    slow.run(g);
    EXPECT_EQ(fast.point(), slow.point());
    EXPECT_EQ(fast.raw_action(), slow.raw_action());
  }
}

TEST(HomologyProperties, ActionsAreUnimodular) {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 1000; ++i) {
    const auto t = trace_word(random_point(rng, i % 2 == 0), random_word(rng), false);
    EXPECT_EQ(t.raw_action.det(), 1);
  }
}
