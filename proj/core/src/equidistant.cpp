#include "heis/equidistant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "heis/angles.hpp"
#include "heis/boundary.hpp"
#include "heis/error.hpp"

namespace heis {

double surface_residual(double a, double b, double c) {
  return std::cos(a) + std::cos(b) + std::cos(c) - 1.5;
}

double SurfacePoint::angular_distance(const SurfacePoint& other) const {
  return std::max({circle_distance(a, other.a), circle_distance(b, other.b),
                   circle_distance(c, other.c)});
}

SurfacePoint reduce_to_central_component(const SurfacePoint& s) {
  return {wrap_angle(s.a), wrap_angle(s.b), wrap_angle(s.c)};
}

namespace {

std::array<double, 3> pairwise_distances(const Triple& P) {
  return {distance(P[0], P[1]), distance(P[1], P[2]), distance(P[2], P[0])};
}

}  // namespace

double distance_spread(const Triple& P) {
  const auto d = pairwise_distances(P);
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  if (*lo < kRepeatedPointTolerance) {
    throw RepeatedPointError("triple points must be pairwise distinct");
  }
  return (*hi - *lo) / *hi;
}

bool is_equidistant(const Triple& P, double tol) { return distance_spread(P) <= tol; }

EquidistantTriple::EquidistantTriple(const Triple& points, double tol) : points_(points) {
  const double spread = distance_spread(points);
  if (spread > tol) {
    std::ostringstream msg;
    msg << "triple is not equidistant: relative distance spread " << spread;
    throw NotEquidistantError(msg.str(), spread);
  }
}

double EquidistantTriple::side() const { return distance(points_[0], points_[1]); }

Triple apply(const Similarity& g, const Triple& P) { return {g(P[0]), g(P[1]), g(P[2])}; }

Triple apply_involution_j(const Triple& P) {
  return {involution_j(P[0]), involution_j(P[1]), involution_j(P[2])};
}

Triple reversed(const Triple& P) { return {P[2], P[1], P[0]}; }

namespace {

SurfacePoint angles_of_quadruple(const Triple& P) {
  const CrossRatioTriple x =
      cross_ratio_triple(P[0], BoundaryPoint::infinity(), P[1], P[2]);
  return {std::arg(x.x1), std::arg(x.x2), std::arg(x.x3)};
}

}  // namespace

SurfacePoint abc_from_triple(const Triple& P, double tol) {
  EquidistantTriple checked(P, tol);
  return angles_of_quadruple(checked.points());
}

SurfacePoint abc_from_triple(const EquidistantTriple& P) {
  return angles_of_quadruple(P.points());
}

const std::array<SurfacePoint, 4>& exceptional_points() {
  static const std::array<SurfacePoint, 4> points{{
      {kPiOver3, -kPiOver3, kPiOver3},
      {kPiOver3, -kPiOver3, -kPiOver3},
      {-kPiOver3, kPiOver3, kPiOver3},
      {-kPiOver3, kPiOver3, -kPiOver3},
  }};
  return points;
}

namespace {

struct NearestExceptional {
  std::size_t index;
  double distance;
};

NearestExceptional nearest_exceptional(const SurfacePoint& s) {
  NearestExceptional best{0, std::numeric_limits<double>::infinity()};
  const auto& points = exceptional_points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = s.angular_distance(points[i]);
    if (d < best.distance) best = {i, d};
  }
  return best;
}

void require_on_surface(const SurfacePoint& s, double tol) {
  if (!std::isfinite(s.a) || !std::isfinite(s.b) || !std::isfinite(s.c)) {
    throw DomainError("surface angles must be finite");
  }
  const double r = s.residual();
  if (std::abs(r) > tol) {
    std::ostringstream msg;
    msg << "(" << s.a << ", " << s.b << ", " << s.c
        << ") is not on the equidistant surface: residual " << r;
    throw OffSurfaceError(msg.str(), r);
  }
}

}  // namespace

ConstructionAngles construction_angles(const SurfacePoint& s, double tol) {
  require_on_surface(s, tol);
  const SurfacePoint r = reduce_to_central_component(s);
  ConstructionAngles out;
  out.A1 = (r.a - r.b - r.c) / 2.0;
  out.A4 = (r.a - r.b + r.c) / 2.0;
  const Complex w = 1.0 - std::polar(1.0, r.a) - std::polar(1.0, r.b);
  out.eta = std::arg(w) / 2.0;
  out.in_b_set = nearest_exceptional(r).distance <= kExceptionalTolerance;
  return out;
}

namespace {

// Lifts of (p1, p3) for the generic case. Both are null for any eta, and
// <p1,p3> = 1 holds exactly when 2 sqrt(cos A1 cos A4) e^{-2i eta} is the
// conjugate of 1 - e^{ia} - e^{ib}.
std::pair<Lift, Lift> generic_lifts(const SurfacePoint& s, double cos_a1, double cos_a4,
                                    double eta) {
  const Lift p1(-std::polar(1.0, -s.a / 2), std::sqrt(2.0 * cos_a4) * std::polar(1.0, -eta),
                std::polar(1.0, (s.c - s.b) / 2));
  const Lift p3(std::polar(1.0, (s.b + s.c) / 2),
                std::sqrt(2.0 * cos_a1) * std::polar(1.0, eta), -std::polar(1.0, s.a / 2));
  return {p1, p3};
}

Triple triple_from_lifts(const Lift& p1, const Lift& p3) {
  return {p1.to_boundary_point().finite(), HeisPoint::origin(),
          p3.to_boundary_point().finite()};
}

// Explicit lifts for (pi/3, -pi/3, pi/3), where A4 = pi/2 and A1 = pi/6.
Triple exceptional_representative() {
  const double s3 = std::sqrt(3.0);
  const Lift p1(Complex(-s3, 1.0) / 2.0, 0.0, Complex(1.0, s3) / 2.0);
  const Lift p3(1.0, std::pow(3.0, 0.25), -Complex(s3, 1.0) / 2.0);
  return triple_from_lifts(p1, p3);
}

// The other three exceptional points come from the representative through
// relabelling and j: reversal maps (a,b,c) to (-b,-a,-c) and j negates.
Triple exceptional_triple(std::size_t index) {
  const Triple base = exceptional_representative();
  switch (index) {
    case 0:
      return base;
    case 1:
      return reversed(base);
    case 2:
      return apply_involution_j(reversed(base));
    default:
      return apply_involution_j(base);
  }
}

EquidistantTriple verified(const Triple& P, const SurfacePoint& target) {
  EquidistantTriple out(P, 1e-9);
  const SurfacePoint got = abc_from_triple(out);
  if (got.angular_distance(target) > 1e-9) {
    std::ostringstream msg;
    msg << "construction missed its target angles by " << got.angular_distance(target);
    throw Error(msg.str());
  }
  return out;
}

}  // namespace

EquidistantTriple triple_from_abc(const SurfacePoint& s, double tol) {
  const ConstructionAngles angles = construction_angles(s, tol);
  const SurfacePoint r = reduce_to_central_component(s);
  if (std::max({std::abs(r.a), std::abs(r.b), std::abs(r.c)}) > kTwoPiOver3 + tol) {
    throw DomainError("angles fall outside the central component");
  }

  const NearestExceptional near = nearest_exceptional(r);
  if (angles.in_b_set) {
    return verified(exceptional_triple(near.index), exceptional_points()[near.index]);
  }

  // Near the exceptional set one of the cosines vanishes and cancels badly;
  // recover it from |1 - e^{ia} - e^{ib}|^2 = 4 cos A1 cos A4 instead, which
  // keeps <p1,p3> = 1 consistent with eta.
  double cos_a1 = std::max(0.0, std::cos(angles.A1));
  double cos_a4 = std::max(0.0, std::cos(angles.A4));
  const double w2 = std::norm(1.0 - std::polar(1.0, r.a) - std::polar(1.0, r.b));
  if (cos_a1 >= cos_a4 && cos_a1 > 0.0) {
    cos_a4 = w2 / (4.0 * cos_a1);
  } else if (cos_a4 > 0.0) {
    cos_a1 = w2 / (4.0 * cos_a4);
  }
  if (4.0 * cos_a1 * cos_a4 < 1e-18) {
    if (near.distance <= 1e-6) {
      return verified(exceptional_triple(near.index), exceptional_points()[near.index]);
    }
    throw DomainError("angles are numerically degenerate near the exceptional set");
  }

  const auto [p1, p3] = generic_lifts(r, cos_a1, cos_a4, angles.eta);
  return verified(triple_from_lifts(p1, p3), r);
}

std::string_view to_string(TripleClass c) {
  switch (c) {
    case TripleClass::CCircle:
      return "ccircle";
    case TripleClass::RCircle:
      return "rcircle";
    case TripleClass::Generic:
      break;
  }
  return "generic";
}

TripleClass triple_class_from_string(std::string_view name) {
  if (name == "generic") return TripleClass::Generic;
  if (name == "ccircle") return TripleClass::CCircle;
  if (name == "rcircle") return TripleClass::RCircle;
  throw DomainError("unknown triple class: " + std::string(name));
}

TripleClass classify_triple(const EquidistantTriple& P) {
  const double A = cartan_invariant(P[0], P[1], P[2]);
  if (std::abs(std::abs(A) - kPi / 2) <= kClassifyTolerance) return TripleClass::CCircle;
  if (std::abs(A) <= kClassifyTolerance) return TripleClass::RCircle;
  return TripleClass::Generic;
}

TripleClass classify_surface_point(const SurfacePoint& s) {
  const double A = -wrap_angle(s.a + s.b + s.c) / 2.0;
  if (std::abs(std::abs(A) - kPi / 2) <= kClassifyTolerance) return TripleClass::CCircle;
  if (std::abs(A) <= kClassifyTolerance) return TripleClass::RCircle;
  return TripleClass::Generic;
}

bool on_c_circle_locus(const SurfacePoint& s, double tol) {
  const SurfacePoint plus{kPiOver3, kPiOver3, kPiOver3};
  const SurfacePoint minus{-kPiOver3, -kPiOver3, -kPiOver3};
  return s.angular_distance(plus) <= tol || s.angular_distance(minus) <= tol;
}

SurfacePoint random_surface_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kTwoPiOver3, kTwoPiOver3);
  std::bernoulli_distribution flip(0.5);
  for (;;) {
    const double a = angle(rng);
    const double b = angle(rng);
    const double u = 1.5 - std::cos(a) - std::cos(b);  // >= -1/2 always
    if (u > 1.0) continue;
    const double c = std::acos(std::max(u, -0.5));
    return {a, b, flip(rng) ? c : -c};
  }
}

Similarity random_similarity(std::mt19937_64& rng, const SimilarityBounds& bounds) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> turn(-kPi, kPi);
  // Gauge rho splits as |z|^2 = rho^2 cos(psi), t = rho^2 sin(psi).
  const double rho = bounds.max_translation_gauge * unit(rng);
  const double psi = (unit(rng) - 0.5) * kPi;
  const HeisPoint q(rho * std::sqrt(std::cos(psi)) * std::polar(1.0, turn(rng)),
                    rho * rho * std::sin(psi));
  const double log_lo = std::log(bounds.min_dilation);
  const double log_hi = std::log(bounds.max_dilation);
  const double r = std::exp(log_lo + (log_hi - log_lo) * unit(rng));
  return {q, turn(rng), r};
}

EquidistantTriple random_equidistant_triple(std::mt19937_64& rng,
                                            const RandomTripleOptions& options) {
  std::optional<EquidistantTriple> P;
  while (!P) {
    try {
      P = triple_from_abc(random_surface_point(rng));
    } catch (const DomainError&) {
      // Only reachable right next to the exceptional set; draw again.
    }
  }
  if (!options.with_similarity) return *P;
  const Similarity g = random_similarity(rng, options.bounds);
  return EquidistantTriple(apply(g, P->points()), 1e-9);
}

EquidistantTriple random_equidistant_triple(std::uint64_t seed,
                                            const RandomTripleOptions& options) {
  std::mt19937_64 rng(seed);
  return random_equidistant_triple(rng, options);
}

}  // namespace heis
