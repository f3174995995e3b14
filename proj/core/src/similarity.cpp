#include "heis/similarity.hpp"

#include <cmath>

#include "heis/angles.hpp"
#include "heis/error.hpp"

namespace heis {

Similarity::Similarity(HeisPoint translation, double rotation, double dilation)
    : translation_(translation), rotation_(wrap_angle(rotation)), dilation_(dilation) {
  if (!std::isfinite(rotation)) throw DomainError("rotation angle must be finite");
  if (!(dilation > 0.0) || !std::isfinite(dilation)) {
    throw DomainError("dilation factor must be positive and finite");
  }
}

namespace {

// R_phi o D_r. Both commute and are group automorphisms of H.
HeisPoint linear_part(double phi, double r, const HeisPoint& p) {
  return {r * std::polar(1.0, phi) * p.z(), r * r * p.t()};
}

}  // namespace

HeisPoint Similarity::apply(const HeisPoint& p) const {
  return mul(translation_, linear_part(rotation_, dilation_, p));
}

Similarity Similarity::inverse() const {
  const double phi = -rotation_;
  const double r = 1.0 / dilation_;
  return {linear_part(phi, r, heis::inverse(translation_)), phi, r};
}

Similarity compose(const Similarity& g, const Similarity& h) {
  // g(h(p)) = q1 * M1(q2 * M2 p) = (q1 * M1 q2) * (M1 M2 p).
  const HeisPoint moved = linear_part(g.rotation(), g.dilation(), h.translation());
  return {mul(g.translation(), moved), g.rotation() + h.rotation(),
          g.dilation() * h.dilation()};
}

}  // namespace heis
