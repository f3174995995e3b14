#include <gtest/gtest.h>

#include <random>

#include "heis/angles.hpp"
#include "heis/io.hpp"

namespace heis {
namespace {

TEST(JsonTest, HeisPointSchema) {
  const Json j = HeisPoint(1.5, -2.0, 0.25);
  EXPECT_EQ(j, Json::parse(R"({"re": 1.5, "im": -2.0, "t": 0.25})"));
  EXPECT_THROW(Json::parse(R"({"re": 1.0, "t": 0.0})").get<HeisPoint>(), Json::exception);
}

TEST(JsonTest, SurfacePointSchema) {
  const Json j = SurfacePoint{kPiOver3, kPiOver3, kPiOver3};
  EXPECT_EQ(j.at("class"), "ccircle");
  EXPECT_NEAR(j.at("residual").get<double>(), 0.0, 1e-15);
  EXPECT_EQ(j.get<SurfacePoint>().a, kPiOver3);
  const Json r = SurfacePoint{0.0, 0.0, 0.0};
  EXPECT_EQ(r.at("class"), "rcircle");
  EXPECT_EQ(r.at("residual"), 1.5);
}

TEST(JsonTest, LiftAndCrossRatioSchemas) {
  const Lift l = standard_lift(HeisPoint(1.0, 0.0, 0.0));
  const Json j = lift_to_json(l);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0], Json::parse(R"({"re": -1.0, "im": 0.0})"));
  EXPECT_EQ(lift_from_json(j).coords(), l.coords());
  EXPECT_THROW(lift_from_json(Json::array({1, 2})), Json::exception);

  const CrossRatioTriple x = cross_ratio_triple(HeisPoint(0.1, 0.2, 0.3), BoundaryPoint::infinity(),
                                                HeisPoint(-1.0, 0.5, 0.0), HeisPoint(0.7, 0.0, -1.0));
  const Json jx = x;
  EXPECT_TRUE(jx.contains("residual1"));
  EXPECT_TRUE(jx.contains("residual2"));
  const CrossRatioTriple back = jx.get<CrossRatioTriple>();
  EXPECT_EQ(back.x1, x.x1);
  EXPECT_EQ(back.x3, x.x3);
}

TEST(JsonTest, TripleRoundTripIsLossless) {
  std::mt19937_64 rng(60);
  for (int i = 0; i < 200; ++i) {
    const Triple P = random_equidistant_triple(rng).points();
    const Triple back = triple_from_json(Json::parse(triple_to_json(P).dump()));
    EXPECT_EQ(back, P);
  }
}

}  // namespace
}  // namespace heis
