#include "heis/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heis/angles.hpp"
#include "heis/error.hpp"

namespace heis {

const HeisPoint& BoundaryPoint::finite() const {
  if (!finite_) throw DomainError("boundary point is the point at infinity");
  return *finite_;
}

Lift::Lift(Complex v1, Complex v2, Complex v3) : v_{v1, v2, v3} {
  for (const Complex& c : v_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("lift coordinates must be finite");
    }
  }
  if (v1 == 0.0 && v2 == 0.0 && v3 == 0.0) throw DomainError("lift must be nonzero");
}

Lift Lift::scaled(Complex lambda) const {
  if (lambda == 0.0) throw DomainError("lift scale factor must be nonzero");
  return {lambda * v_[0], lambda * v_[1], lambda * v_[2]};
}

BoundaryPoint Lift::to_boundary_point() const {
  const double size = std::max({std::abs(v_[0]), std::abs(v_[1]), std::abs(v_[2])});
  if (std::abs(v_[2]) <= 1e-14 * size) return BoundaryPoint::infinity();
  const Complex first = v_[0] / v_[2];
  const Complex second = v_[1] / v_[2];
  return HeisPoint(second / std::numbers::sqrt2, first.imag());
}

Lift standard_lift(const BoundaryPoint& p) {
  if (p.is_infinity()) return {1.0, 0.0, 0.0};
  const HeisPoint& q = p.finite();
  return {Complex(-std::norm(q.z()), q.t()), std::numbers::sqrt2 * q.z(), 1.0};
}

Complex hermitian(const Lift& u, const Lift& w) {
  return u[0] * std::conj(w[2]) + u[1] * std::conj(w[1]) + u[2] * std::conj(w[0]);
}

void require_distinct(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinity() || q.is_infinity()) {
    if (p.is_infinity() && q.is_infinity()) {
      throw RepeatedPointError("the point at infinity appears twice");
    }
    return;
  }
  if (distance(p.finite(), q.finite()) < kRepeatedPointTolerance) {
    throw RepeatedPointError("boundary points must be pairwise distinct");
  }
}

namespace {

double norm_inf(const Lift& u) {
  return std::max({std::abs(u[0]), std::abs(u[1]), std::abs(u[2])});
}

// Scale-free version of the repeated-point test for arbitrary lifts. For
// standard lifts |<u,w>| = d(u,w)^2, so this matches the distance threshold.
Complex checked_form(const Lift& u, const Lift& w) {
  const Complex h = hermitian(u, w);
  const double scale = norm_inf(u) * norm_inf(w);
  if (std::abs(h) <= kRepeatedPointTolerance * kRepeatedPointTolerance * scale) {
    throw RepeatedPointError("boundary points must be pairwise distinct");
  }
  return h;
}

}  // namespace

double cartan_invariant(const Lift& p1, const Lift& p2, const Lift& p3) {
  const Complex triple =
      -checked_form(p1, p2) * checked_form(p2, p3) * checked_form(p3, p1);
  // The real part is nonnegative for null vectors; clamp the rounding spill.
  return std::clamp(std::arg(triple), -kPi / 2, kPi / 2);
}

double cartan_invariant(const BoundaryPoint& p1, const BoundaryPoint& p2,
                        const BoundaryPoint& p3) {
  require_distinct(p1, p2);
  require_distinct(p2, p3);
  require_distinct(p1, p3);
  return cartan_invariant(standard_lift(p1), standard_lift(p2), standard_lift(p3));
}

Complex cross_ratio(const Lift& p1, const Lift& p2, const Lift& p3, const Lift& p4) {
  return checked_form(p3, p1) * checked_form(p4, p2) /
         (checked_form(p4, p1) * checked_form(p3, p2));
}

namespace {

void require_pairwise_distinct(const BoundaryPoint& p1, const BoundaryPoint& p2,
                               const BoundaryPoint& p3, const BoundaryPoint& p4) {
  const std::array<const BoundaryPoint*, 4> pts{&p1, &p2, &p3, &p4};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) require_distinct(*pts[i], *pts[j]);
  }
}

}  // namespace

Complex cross_ratio(const BoundaryPoint& p1, const BoundaryPoint& p2,
                    const BoundaryPoint& p3, const BoundaryPoint& p4) {
  require_pairwise_distinct(p1, p2, p3, p4);
  return cross_ratio(standard_lift(p1), standard_lift(p2), standard_lift(p3),
                     standard_lift(p4));
}

double CrossRatioTriple::first_relation_residual() const {
  const double lhs = std::norm(x3);
  const double rhs = std::norm(x2) / std::norm(x1);
  return std::abs(lhs - rhs) / std::max({1.0, lhs, rhs});
}

double CrossRatioTriple::second_relation_residual() const {
  const double m1 = std::norm(x1);
  const double m2 = std::norm(x2);
  const double lhs = 2.0 * m1 * x3.real();
  const double rhs = m1 + m2 - 2.0 * x1.real() - 2.0 * x2.real() + 1.0;
  const double scale = std::max({1.0, std::abs(lhs), m1, m2, 2.0 * std::abs(x1.real()),
                                 2.0 * std::abs(x2.real())});
  return std::abs(lhs - rhs) / scale;
}

bool CrossRatioTriple::in_real_locus(double tol) const {
  const double scale = std::max({1.0, std::abs(x1), std::abs(x2)});
  return std::abs(x1.imag()) <= tol * scale && std::abs(x2.imag()) <= tol * scale &&
         std::abs(x1.real() + x2.real() - 1.0) <= tol * scale;
}

CrossRatioTriple cross_ratio_triple(const Lift& p1, const Lift& p2, const Lift& p3,
                                    const Lift& p4) {
  return {cross_ratio(p1, p2, p3, p4), cross_ratio(p1, p3, p2, p4),
          cross_ratio(p2, p3, p1, p4)};
}

CrossRatioTriple cross_ratio_triple(const BoundaryPoint& p1, const BoundaryPoint& p2,
                                    const BoundaryPoint& p3, const BoundaryPoint& p4) {
  require_pairwise_distinct(p1, p2, p3, p4);
  return cross_ratio_triple(standard_lift(p1), standard_lift(p2), standard_lift(p3),
                            standard_lift(p4));
}

double CartanQuadrupleReport::max_residual() const {
  if (!residuals) return 0.0;
  return *std::max_element(residuals->begin(), residuals->end());
}

CartanQuadrupleReport cartan_quadruple_relations(const BoundaryPoint& p1,
                                                 const BoundaryPoint& p2,
                                                 const BoundaryPoint& p3,
                                                 const BoundaryPoint& p4) {
  require_pairwise_distinct(p1, p2, p3, p4);
  const Lift l1 = standard_lift(p1);
  const Lift l2 = standard_lift(p2);
  const Lift l3 = standard_lift(p3);
  const Lift l4 = standard_lift(p4);

  CartanQuadrupleReport r;
  r.A1 = cartan_invariant(l2, l3, l4);
  r.A2 = cartan_invariant(l1, l3, l4);
  r.A3 = cartan_invariant(l1, l2, l4);
  r.A4 = cartan_invariant(l1, l2, l3);

  // (p1,p2,p3) and (p1,p2,p4) share p1,p2, and a C-circle is fixed by two
  // of its points, so both spanning C-circles means all four lie on one.
  const auto spans_c_circle = [](double A) {
    return std::abs(std::abs(A) - kPi / 2) <= kCCircleTolerance;
  };
  r.on_one_c_circle = spans_c_circle(r.A4) && spans_c_circle(r.A3);

  const CrossRatioTriple x = cross_ratio_triple(l1, l2, l3, l4);
  r.a = std::arg(x.x1);
  r.b = std::arg(x.x2);
  r.c = std::arg(x.x3);
  if (!r.on_one_c_circle) {
    r.residuals = std::array<double, 4>{
        circle_distance(r.a, r.A1 - r.A2),
        circle_distance(r.b, -r.A2 - r.A4),
        circle_distance(r.c, r.A4 - r.A1),
        circle_distance(r.A3 + r.A1, r.A2 + r.A4),
    };
  }
  return r;
}

}  // namespace heis
