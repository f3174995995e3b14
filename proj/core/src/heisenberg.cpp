#include "heis/heisenberg.hpp"

#include <cmath>

#include "heis/error.hpp"

namespace heis {

HeisPoint::HeisPoint(Complex z, double t) : z_(z), t_(t) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(t)) {
    throw DomainError("HeisPoint coordinates must be finite");
  }
}

HeisPoint mul(const HeisPoint& p, const HeisPoint& q) {
  const Complex z = p.z();
  const Complex w = q.z();
  return {z + w, p.t() + q.t() + 2.0 * std::imag(z * std::conj(w))};
}

HeisPoint inverse(const HeisPoint& p) { return {-p.z(), -p.t()}; }

Complex gauge_form(const HeisPoint& p) { return {std::norm(p.z()), -p.t()}; }

double gauge(const HeisPoint& p) {
  // |A|^(1/2) with A = |z|^2 - it; hypot avoids overflow in |z|^4.
  return std::sqrt(std::hypot(std::norm(p.z()), p.t()));
}

double distance(const HeisPoint& p, const HeisPoint& q) {
  return gauge(mul(inverse(p), q));
}

HeisPoint rotate(double phi, const HeisPoint& p) {
  return {std::polar(1.0, phi) * p.z(), p.t()};
}

HeisPoint dilate(double r, const HeisPoint& p) {
  if (!(r > 0.0)) throw DomainError("dilation factor must be positive");
  return {r * p.z(), r * r * p.t()};
}

HeisPoint involution_j(const HeisPoint& p) { return {std::conj(p.z()), -p.t()}; }

HeisPoint inversion(const HeisPoint& p) {
  const Complex denom(-std::norm(p.z()), p.t());
  const double denom_sq = std::norm(denom);
  if (denom_sq == 0.0) throw DomainError("inversion is undefined at the origin");
  return {p.z() / denom, -p.t() / denom_sq};
}

}  // namespace heis
