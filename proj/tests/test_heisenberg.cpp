#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "heis/angles.hpp"
#include "heis/error.hpp"
#include "heis/heisenberg.hpp"
#include "heis/similarity.hpp"
#include "oracles.hpp"

namespace heis {
namespace {

using Cx = std::complex<double>;

void ExpectNear(const HeisPoint& got, const HeisPoint& want, double tol = 1e-12) {
  EXPECT_NEAR(got.z().real(), want.z().real(), tol);
  EXPECT_NEAR(got.z().imag(), want.z().imag(), tol);
  EXPECT_NEAR(got.t(), want.t(), tol);
}

HeisPoint RandomPoint(std::mt19937_64& rng, double scale = 1.0) {
  const auto p = oracle::random_point(rng, scale);
  return {p.z, p.t};
}

oracle::Pt Raw(const HeisPoint& p) { return {p.z(), p.t()}; }

TEST(HeisPointTest, RejectsNonFiniteCoordinates) {
  EXPECT_THROW(HeisPoint(Cx(NAN, 0.0), 0.0), DomainError);
  EXPECT_THROW(HeisPoint(0.0, 0.0, INFINITY), DomainError);
  EXPECT_NO_THROW(HeisPoint(1.0, -2.0, 3.0));
}

TEST(GroupLawTest, Examples) {
  const HeisPoint p(0.3, -1.2, 0.7);
  EXPECT_EQ(mul(HeisPoint::origin(), p), p);
  // 2 Im(1 * conj(i)) = -2.
  ExpectNear(mul(HeisPoint(1.0, 0.0, 0.0), HeisPoint(0.0, 1.0, 0.0)), HeisPoint(1.0, 1.0, -2.0));
  ExpectNear(mul(p, inverse(p)), HeisPoint::origin());
}

TEST(GroupLawTest, InverseExamples) {
  EXPECT_EQ(inverse(HeisPoint::origin()), HeisPoint::origin());
  EXPECT_EQ(inverse(HeisPoint(1.0, 0.0, 0.0)), HeisPoint(-1.0, 0.0, 0.0));
  const HeisPoint p(0.0, 1.0, 3.0);
  EXPECT_EQ(inverse(p), HeisPoint(0.0, -1.0, -3.0));
  ExpectNear(mul(p, inverse(p)), HeisPoint::origin());
  ExpectNear(mul(inverse(p), p), HeisPoint::origin());
}

TEST(GroupLawTest, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const HeisPoint p = RandomPoint(rng), q = RandomPoint(rng), r = RandomPoint(rng);
    ExpectNear(mul(mul(p, q), r), mul(p, mul(q, r)), 1e-12);
    ExpectNear(mul(p, inverse(p)), HeisPoint::origin(), 1e-15);
    ExpectNear(mul(inverse(p), p), HeisPoint::origin(), 1e-15);
  }
}

TEST(GaugeTest, Examples) {
  EXPECT_EQ(gauge(HeisPoint::origin()), 0.0);
  EXPECT_DOUBLE_EQ(gauge(HeisPoint(1.0, 0.0, 0.0)), 1.0);
  EXPECT_DOUBLE_EQ(gauge(HeisPoint(0.0, 0.0, 1.0)), 1.0);
  EXPECT_DOUBLE_EQ(gauge(HeisPoint(0.0, 2.0, 0.0)), 2.0);
  EXPECT_DOUBLE_EQ(gauge(HeisPoint(0.0, 0.0, -4.0)), 2.0);
}

TEST(DistanceTest, Examples) {
  const HeisPoint p(0.4, 0.1, -0.3);
  EXPECT_EQ(distance(p, p), 0.0);
  EXPECT_DOUBLE_EQ(distance(HeisPoint::origin(), HeisPoint(1.0, 0.0, 0.0)), 1.0);
  // (-1,0)*(0,1) = (-1,1), gauge (1+1)^(1/4).
  EXPECT_NEAR(distance(HeisPoint(1.0, 0.0, 0.0), HeisPoint(0.0, 0.0, 1.0)), std::pow(2.0, 0.25),
              1e-15);
}

TEST(DistanceTest, AgreesWithIndependentRoutes) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const HeisPoint p = RandomPoint(rng, 2.0), q = RandomPoint(rng, 2.0);
    const double d = distance(p, q);
    EXPECT_NEAR(d, oracle::distance_expanded(Raw(p), Raw(q)), 1e-12 * (1.0 + d));
    EXPECT_NEAR(d, oracle::distance_via_form(Raw(p), Raw(q)), 1e-12 * (1.0 + d));
    EXPECT_EQ(d, distance(q, p));
  }
}

// Not a proof that Koranyi-Cygan is a metric, just a sanity sweep.
TEST(DistanceTest, TriangleInequalitySpotCheck) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const HeisPoint p = RandomPoint(rng), q = RandomPoint(rng), r = RandomPoint(rng);
    EXPECT_LE(distance(p, r), distance(p, q) + distance(q, r) + 1e-12);
  }
}

TEST(SimilarityTest, ApplyExamples) {
  const HeisPoint p(0.5, -0.25, 2.0);
  EXPECT_EQ(Similarity::identity().apply(p), p);
  EXPECT_EQ(Similarity::dilation_by(2.0).apply(HeisPoint(1.0, 0.0, 1.0)), HeisPoint(2.0, 0.0, 4.0));
  ExpectNear(Similarity::rotation_by(kPi).apply(HeisPoint(1.0, 0.0, 0.0)),
             HeisPoint(-1.0, 0.0, 0.0), 1e-15);
}

TEST(SimilarityTest, NormalisesRotationAndRejectsBadDilation) {
  EXPECT_DOUBLE_EQ(Similarity(HeisPoint{}, 3.0 * kPi, 1.0).rotation(), kPi);
  EXPECT_DOUBLE_EQ(Similarity(HeisPoint{}, -kPi, 1.0).rotation(), kPi);
  EXPECT_NEAR(Similarity(HeisPoint{}, -2.5 * kPi, 1.0).rotation(), -0.5 * kPi, 1e-15);
  EXPECT_THROW(Similarity(HeisPoint{}, 0.0, 0.0), DomainError);
  EXPECT_THROW(Similarity(HeisPoint{}, 0.0, -1.0), DomainError);
  EXPECT_THROW(dilate(0.0, HeisPoint{}), DomainError);
}

TEST(SimilarityTest, ComposeExamples) {
  const Similarity h(HeisPoint(0.3, 0.2, -1.0), 0.7, 1.5);
  EXPECT_EQ(compose(Similarity::identity(), h), h);
  const Similarity dd = compose(Similarity::dilation_by(2.0), Similarity::dilation_by(3.0));
  EXPECT_DOUBLE_EQ(dd.dilation(), 6.0);
  EXPECT_EQ(dd.translation(), HeisPoint::origin());
  EXPECT_EQ(dd.rotation(), 0.0);

  // R_phi o L_(w,s) = L_(e^{i phi} w, s) o R_phi.
  const double phi = 0.9;
  const HeisPoint ws(Cx(0.4, -1.1), 0.6);
  const Similarity rt = compose(Similarity::rotation_by(phi), Similarity::translation_by(ws));
  ExpectNear(rt.translation(), HeisPoint(std::polar(1.0, phi) * ws.z(), ws.t()), 1e-15);
  EXPECT_DOUBLE_EQ(rt.rotation(), phi);
  EXPECT_DOUBLE_EQ(rt.dilation(), 1.0);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const HeisPoint p = RandomPoint(rng);
    ExpectNear(rt(p), rotate(phi, translate(ws, p)), 1e-12);
  }
}

Similarity RandomSimilarity(std::mt19937_64& rng, bool isometry = false) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> log_r(std::log(0.1), std::log(10.0));
  return {RandomPoint(rng, 3.0), angle(rng), isometry ? 1.0 : std::exp(log_r(rng))};
}

TEST(SimilarityTest, ComposeMatchesFunctionalComposition) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 1000; ++i) {
    const Similarity g = RandomSimilarity(rng), h = RandomSimilarity(rng);
    const HeisPoint p = RandomPoint(rng);
    const HeisPoint direct = g(h(p));
    const HeisPoint composed = compose(g, h)(p);
    const double scale = 1.0 + gauge(direct) * gauge(direct);
    EXPECT_NEAR(composed.z().real(), direct.z().real(), 1e-12 * scale);
    EXPECT_NEAR(composed.z().imag(), direct.z().imag(), 1e-12 * scale);
    EXPECT_NEAR(composed.t(), direct.t(), 1e-12 * scale);
  }
}

TEST(SimilarityTest, InverseUndoesApply) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    const Similarity g = RandomSimilarity(rng);
    const HeisPoint p = RandomPoint(rng);
    ExpectNear(g.inverse()(g(p)), p, 1e-9);
  }
}

TEST(SimilarityTest, IsometriesPreserveAndDilationsScaleDistance) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const HeisPoint p = RandomPoint(rng), q = RandomPoint(rng);
    const double d = distance(p, q);
    const Similarity g = RandomSimilarity(rng, /*isometry=*/true);
    EXPECT_NEAR(distance(g(p), g(q)), d, 1e-12 * d);
    EXPECT_NEAR(distance(involution_j(p), involution_j(q)), d, 1e-12 * d);
    const double r = std::exp(std::uniform_real_distribution<double>(-2.0, 2.0)(rng));
    EXPECT_NEAR(distance(dilate(r, p), dilate(r, q)), r * d, 1e-12 * r * d);
  }
}

TEST(InvolutionTest, Examples) {
  EXPECT_EQ(involution_j(HeisPoint(1.0, 0.0, 0.0)), HeisPoint(1.0, 0.0, -0.0));
  EXPECT_EQ(involution_j(HeisPoint(0.0, 1.0, 1.0)), HeisPoint(0.0, -1.0, -1.0));
  const HeisPoint p(0.2, 0.7, -0.4);
  EXPECT_EQ(involution_j(involution_j(p)), p);
}

TEST(InversionTest, Examples) {
  ExpectNear(inversion(HeisPoint(1.0, 0.0, 0.0)), HeisPoint(-1.0, 0.0, 0.0), 1e-15);
  ExpectNear(inversion(HeisPoint(0.0, 0.0, 1.0)), HeisPoint(0.0, 0.0, -1.0), 1e-15);
  EXPECT_THROW(inversion(HeisPoint::origin()), DomainError);
}

TEST(InversionTest, InvolutionAndDistanceIdentity) {
  std::mt19937_64 rng(18);
  const HeisPoint o = HeisPoint::origin();
  for (int i = 0; i < 1000; ++i) {
    const HeisPoint p = RandomPoint(rng), q = RandomPoint(rng);
    ExpectNear(inversion(inversion(p)), p, 1e-9 * (1.0 + gauge(p) * gauge(p)));
    const double want = distance(p, q) / (distance(p, o) * distance(q, o));
    EXPECT_NEAR(distance(inversion(p), inversion(q)), want, 1e-10 * want);
  }
}

TEST(AnglesTest, WrapIntoPrincipalRange) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3.0 * kPi / 2.0), -kPi / 2.0, 1e-15);
  EXPECT_NEAR(circle_distance(kPi - 1e-3, -kPi + 1e-3), 2e-3, 1e-12);
}

}  // namespace
}  // namespace heis
