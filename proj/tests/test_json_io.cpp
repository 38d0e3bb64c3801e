#include <gtest/gtest.h>

#include "ergodir/builder_rational.hpp"
#include "ergodir/json_io.hpp"

using namespace ergodir;

namespace {

DirectionSpec quarter() {
  return direction_stream(RationalParam::from_lambda(BigRat(1, 4)), NkRule::constant(1));
}

}  // namespace

TEST(JsonIo, SpecRoundTrip) {
  const auto spec = quarter();
  const auto text = spec_to_json(spec, 3);
  EXPECT_EQ(spec_cached_blocks(text), 3u);
  const auto loaded = spec_from_json(text);
  EXPECT_EQ(loaded.prefix(24), spec.prefix(24));
  EXPECT_EQ(loaded.z0(), spec.z0());
  EXPECT_EQ(spec_to_json(loaded, 3), text);
}

TEST(JsonIo, ReloadedSpecVerifiesIdentically) {
  const auto spec = quarter();
  const auto direct = report_to_json(verify(spec, 3));
  const auto loaded = spec_from_json(spec_to_json(spec, 3));
  EXPECT_EQ(report_to_json(verify(loaded, 3)), direct);
}

TEST(JsonIo, OverridesSurviveRoundTrip) {
  auto spec = quarter();
  spec.override_digit(9, 3);
  const auto loaded = spec_from_json(spec_to_json(spec, 2));
  EXPECT_EQ(loaded.digit(9), 3u);
}

TEST(JsonIo, IrrationalProvenance) {
  const auto spec = direction_stream_irrational(ExactScalar::quadratic(0, 1, 4, 2), {1, 2});
  const auto text = spec_to_json(spec, 2);
  EXPECT_EQ(spec_from_json(text).prefix(16), spec.prefix(16));
}

TEST(JsonIo, TamperedBlocksAreRejected) {
  auto text = spec_to_json(quarter(), 2);
  const auto pos = text.find("[\n        5,");
  auto tampered = text;
  if (pos != std::string::npos) {
    tampered.replace(pos, 11, "[\n        6,");
  } else {
    const auto p2 = tampered.find("5,");
    tampered.replace(p2, 2, "6,");
  }
  EXPECT_THROW(spec_from_json(tampered), FormatError);
  EXPECT_THROW(spec_from_json("{"), FormatError);
  EXPECT_THROW(spec_from_json("{\"format_version\": 99}"), FormatError);
}

TEST(JsonIo, PointText) {
  EXPECT_EQ(point_text(TorusPoint::parse("0,1/4")), "0;1/4");
}
