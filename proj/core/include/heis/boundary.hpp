#pragma once

#include <array>
#include <optional>

#include "heis/heisenberg.hpp"

namespace heis {

/// A point of the boundary of complex hyperbolic plane: either a finite
/// Heisenberg point or the point at infinity.
class BoundaryPoint {
 public:
  /// The point at infinity.
  BoundaryPoint() = default;
  BoundaryPoint(const HeisPoint& p) : finite_(p) {}  // NOLINT(google-explicit-constructor)

  static BoundaryPoint infinity() { return {}; }

  bool is_infinity() const { return !finite_.has_value(); }
  /// Throws DomainError for the point at infinity.
  const HeisPoint& finite() const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  std::optional<HeisPoint> finite_;
};

/// A nonzero vector of C^{2,1} representing a boundary point projectively.
class Lift {
 public:
  /// Throws DomainError for the zero vector or non-finite entries.
  Lift(Complex v1, Complex v2, Complex v3);

  const Complex& operator[](std::size_t i) const { return v_[i]; }
  const std::array<Complex, 3>& coords() const { return v_; }

  /// Multiply by a nonzero scalar; represents the same boundary point.
  Lift scaled(Complex lambda) const;

  /// Projective normalisation back to the Heisenberg group. Requires a
  /// nonzero third coordinate (otherwise the lift is infinity) and
  /// recovers (z,t) from v/v3 = (-|z|^2+it, sqrt(2) z, 1).
  BoundaryPoint to_boundary_point() const;

 private:
  std::array<Complex, 3> v_;
};

/// (-|z|^2+it, sqrt(2) z, 1) for finite points, (1,0,0) for infinity.
Lift standard_lift(const BoundaryPoint& p);

/// <u,w> = u1 conj(w3) + u2 conj(w2) + u3 conj(w1), signature (2,1).
Complex hermitian(const Lift& u, const Lift& w);

/// Boundary points closer than this in the Koranyi-Cygan distance count as
/// repeated.
inline constexpr double kRepeatedPointTolerance = 1e-12;

/// Throws RepeatedPointError unless p and q are distinct.
void require_distinct(const BoundaryPoint& p, const BoundaryPoint& q);

/// Cartan's angular invariant arg(-<p1,p2><p2,p3><p3,p1>) in [-pi/2, pi/2].
double cartan_invariant(const BoundaryPoint& p1, const BoundaryPoint& p2,
                        const BoundaryPoint& p3);
double cartan_invariant(const Lift& p1, const Lift& p2, const Lift& p3);

/// Complex cross-ratio <p3,p1><p4,p2> / (<p4,p1><p3,p2>).
Complex cross_ratio(const BoundaryPoint& p1, const BoundaryPoint& p2,
                    const BoundaryPoint& p3, const BoundaryPoint& p4);
Complex cross_ratio(const Lift& p1, const Lift& p2, const Lift& p3, const Lift& p4);

/// The three canonical cross-ratios of an ordered quadruple, a point of the
/// cross-ratio variety.
struct CrossRatioTriple {
  Complex x1;  // X(p1,p2,p3,p4)
  Complex x2;  // X(p1,p3,p2,p4)
  Complex x3;  // X(p2,p3,p1,p4)

  /// |X3|^2 - |X2|^2/|X1|^2, divided by max(1, size of the terms).
  double first_relation_residual() const;
  /// 2|X1|^2 Re X3 - (|X1|^2 + |X2|^2 - 2 Re X1 - 2 Re X2 + 1), divided by
  /// max(1, size of the terms).
  double second_relation_residual() const;

  /// Membership in the real locus: X1, X2 real and X1 + X2 = 1.
  bool in_real_locus(double tol = 1e-9) const;
};

CrossRatioTriple cross_ratio_triple(const BoundaryPoint& p1, const BoundaryPoint& p2,
                                    const BoundaryPoint& p3, const BoundaryPoint& p4);
CrossRatioTriple cross_ratio_triple(const Lift& p1, const Lift& p2, const Lift& p3,
                                    const Lift& p4);

/// Cartan invariants of the four sub-triples of a quadruple together with
/// the arguments of its cross-ratios, and the residuals of
///   a = A1 - A2,  b = -A2 - A4,  c = A4 - A1,  A3 + A1 = A2 + A4
/// measured as distances on the circle.
struct CartanQuadrupleReport {
  double A1 = 0.0;  // A(p2,p3,p4)
  double A2 = 0.0;  // A(p1,p3,p4)
  double A3 = 0.0;  // A(p1,p2,p4)
  double A4 = 0.0;  // A(p1,p2,p3)
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// All four points on one C-circle. The relations do not apply and
  /// `residuals` is empty.
  bool on_one_c_circle = false;
  std::optional<std::array<double, 4>> residuals;

  double max_residual() const;
};

/// Tolerance on ||A| - pi/2| used to decide that a triple spans a C-circle.
inline constexpr double kCCircleTolerance = 1e-8;

CartanQuadrupleReport cartan_quadruple_relations(const BoundaryPoint& p1,
                                                 const BoundaryPoint& p2,
                                                 const BoundaryPoint& p3,
                                                 const BoundaryPoint& p4);

}  // namespace heis
