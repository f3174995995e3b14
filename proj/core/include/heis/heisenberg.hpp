#pragma once

#include <complex>

namespace heis {

using Complex = std::complex<double>;

/// A point (z, t) of the first Heisenberg group C x R.
///
/// Both coordinates are required to be finite; the constructor throws
/// DomainError otherwise.
class HeisPoint {
 public:
  constexpr HeisPoint() = default;
  HeisPoint(Complex z, double t);
  HeisPoint(double re, double im, double t) : HeisPoint(Complex(re, im), t) {}

  Complex z() const { return z_; }
  double t() const { return t_; }

  static HeisPoint origin() { return {}; }

  friend bool operator==(const HeisPoint&, const HeisPoint&) = default;

 private:
  Complex z_{0.0, 0.0};
  double t_ = 0.0;
};

/// Group law (z,t)*(w,s) = (z+w, t+s+2 Im(z conj(w))).
HeisPoint mul(const HeisPoint& p, const HeisPoint& q);
inline HeisPoint operator*(const HeisPoint& p, const HeisPoint& q) { return mul(p, q); }

/// Group inverse; (z,t)^-1 = (-z,-t).
HeisPoint inverse(const HeisPoint& p);

/// The complex quantity |z|^2 - i t whose modulus is the squared gauge.
Complex gauge_form(const HeisPoint& p);

/// Koranyi gauge (|z|^4 + t^2)^(1/4).
double gauge(const HeisPoint& p);

/// Koranyi-Cygan distance |p^-1 * q|.
double distance(const HeisPoint& p, const HeisPoint& q);

/// Left translation L_q(p) = q * p.
inline HeisPoint translate(const HeisPoint& q, const HeisPoint& p) { return mul(q, p); }

/// Rotation about the vertical axis, (z,t) -> (e^{i phi} z, t).
HeisPoint rotate(double phi, const HeisPoint& p);

/// Heisenberg dilation (z,t) -> (r z, r^2 t); r must be positive.
HeisPoint dilate(double r, const HeisPoint& p);

/// Isometric involution j(z,t) = (conj(z), -t). Not an element of the
/// similarity group.
HeisPoint involution_j(const HeisPoint& p);

/// Koranyi inversion (z,t) -> (z/(-|z|^2+it), -t/|-|z|^2+it|^2).
/// Throws DomainError at the origin.
HeisPoint inversion(const HeisPoint& p);

}  // namespace heis
