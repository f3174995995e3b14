#pragma once

#include "heis/heisenberg.hpp"

namespace heis {

/// An element of the similarity group G = H x R x R*_+ acting on the
/// Heisenberg group.
///
/// Stored in the normal form L_translation o R_rotation o D_dilation, so
/// apply(p) = translation * (r e^{i phi} z, r^2 t). The rotation angle is
/// kept in (-pi, pi] and the dilation is strictly positive.
class Similarity {
 public:
  Similarity() = default;
  Similarity(HeisPoint translation, double rotation, double dilation);

  static Similarity identity() { return {}; }
  static Similarity translation_by(const HeisPoint& q) { return {q, 0.0, 1.0}; }
  static Similarity rotation_by(double phi) { return {HeisPoint{}, phi, 1.0}; }
  static Similarity dilation_by(double r) { return {HeisPoint{}, 0.0, r}; }

  const HeisPoint& translation() const { return translation_; }
  double rotation() const { return rotation_; }
  double dilation() const { return dilation_; }

  HeisPoint apply(const HeisPoint& p) const;
  HeisPoint operator()(const HeisPoint& p) const { return apply(p); }

  /// Inverse element, again in normal form.
  Similarity inverse() const;

  friend bool operator==(const Similarity&, const Similarity&) = default;

 private:
  HeisPoint translation_;
  double rotation_ = 0.0;
  double dilation_ = 1.0;
};

/// g o h, re-normalised: apply(compose(g,h), p) == g(h(p)).
Similarity compose(const Similarity& g, const Similarity& h);
inline Similarity operator*(const Similarity& g, const Similarity& h) { return compose(g, h); }

}  // namespace heis
