#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "heis/heisenberg.hpp"
#include "heis/similarity.hpp"

namespace heis {

/// Three Heisenberg points, not yet known to be equidistant.
using Triple = std::array<HeisPoint, 3>;

/// cos a + cos b + cos c - 3/2.
double surface_residual(double a, double b, double c);

/// A point (a, b, c) of the equidistant hypersurface
/// cos a + cos b + cos c = 3/2. On the central component every coordinate
/// lies in [-2pi/3, 2pi/3].
struct SurfacePoint {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double residual() const { return surface_residual(a, b, c); }
  /// Largest per-coordinate circle distance to another point.
  double angular_distance(const SurfacePoint& other) const;
};

/// Reduce each angle mod 2pi into (-pi, pi]; on-surface points then land in
/// the central cube [-2pi/3, 2pi/3]^3.
SurfacePoint reduce_to_central_component(const SurfacePoint& s);

/// (max - min) / max of the three pairwise Koranyi-Cygan distances.
/// Throws RepeatedPointError for coincident points.
double distance_spread(const Triple& P);

/// Pairwise distances agree within `tol` relative. Throws
/// RepeatedPointError for coincident points.
bool is_equidistant(const Triple& P, double tol = 1e-9);

/// A triple of pairwise distinct points with equal pairwise distances.
class EquidistantTriple {
 public:
  /// Throws RepeatedPointError or NotEquidistantError.
  explicit EquidistantTriple(const Triple& points, double tol = 1e-9);

  const Triple& points() const { return points_; }
  const HeisPoint& operator[](std::size_t i) const { return points_[i]; }
  /// Common side length d(p1,p2).
  double side() const;

 private:
  Triple points_;
};

/// Image of each point under a similarity.
Triple apply(const Similarity& g, const Triple& P);
/// Image of each point under the involution j; negates (a,b,c).
Triple apply_involution_j(const Triple& P);
/// (p3, p2, p1); maps (a,b,c) to (-b,-a,-c).
Triple reversed(const Triple& P);

/// Arguments of the cross-ratios X1, X2, X3 of the quadruple
/// (p1, infinity, p2, p3). Throws NotEquidistantError when the triple is not
/// equidistant within `tol`.
SurfacePoint abc_from_triple(const Triple& P, double tol = 1e-9);
SurfacePoint abc_from_triple(const EquidistantTriple& P);

/// Intermediate quantities of the explicit construction of a triple from a
/// surface point.
struct ConstructionAngles {
  double A1 = 0.0;   // (a - b - c) / 2
  double A4 = 0.0;   // (a - b + c) / 2
  double eta = 0.0;  // arg(1 - e^{ia} - e^{ib}) / 2, principal branch
  bool in_b_set = false;
};

/// The four exceptional angle triples where 1 - e^{ia} - e^{ib} vanishes:
/// (pi/3,-pi/3,pi/3), (pi/3,-pi/3,-pi/3), (-pi/3,pi/3,pi/3),
/// (-pi/3,pi/3,-pi/3).
const std::array<SurfacePoint, 4>& exceptional_points();

/// Per-angle tolerance for recognising an exceptional point.
inline constexpr double kExceptionalTolerance = 1e-9;
/// Default tolerance on |surface_residual| for accepting input angles.
inline constexpr double kSurfaceTolerance = 1e-9;

/// Throws OffSurfaceError when |residual| > tol.
ConstructionAngles construction_angles(const SurfacePoint& s, double tol = kSurfaceTolerance);

/// An equidistant triple with p2 = (0,0) whose angle triple is s.
/// Off-surface input throws OffSurfaceError; input that falls into the
/// numerically degenerate neighbourhood of the exceptional set without being
/// close enough to snap onto it throws DomainError.
EquidistantTriple triple_from_abc(const SurfacePoint& s, double tol = kSurfaceTolerance);

enum class TripleClass { Generic, CCircle, RCircle };

std::string_view to_string(TripleClass c);
/// Throws DomainError for unknown names.
TripleClass triple_class_from_string(std::string_view name);

/// Tolerance on |A| against 0 and pi/2 used by classify_triple.
inline constexpr double kClassifyTolerance = 1e-8;

/// R-circle iff the Cartan invariant vanishes, C-circle iff it is +-pi/2.
TripleClass classify_triple(const EquidistantTriple& P);

/// The same split read off the angles alone: the Cartan invariant of the
/// triple is -(a+b+c)/2 taken mod pi, so C-circle means a+b+c = pi and
/// R-circle means a+b+c = 0 (mod 2pi).
TripleClass classify_surface_point(const SurfacePoint& s);

/// (a,b,c) equals +-(pi/3, pi/3, pi/3), the image of the C-circle triples,
/// where the parametrisation is two-to-one.
bool on_c_circle_locus(const SurfacePoint& s, double tol = kClassifyTolerance);

/// Bounds used when drawing random similarities.
struct SimilarityBounds {
  double max_translation_gauge = 10.0;
  double min_dilation = 0.1;
  double max_dilation = 10.0;
};

/// Uniform (a, b) in the central square, rejecting pairs with no real c;
/// c = +-arccos(3/2 - cos a - cos b) with a random sign.
SurfacePoint random_surface_point(std::mt19937_64& rng);

/// Translation of gauge at most max_translation_gauge, uniform rotation and
/// log-uniform dilation.
Similarity random_similarity(std::mt19937_64& rng, const SimilarityBounds& bounds = {});

struct RandomTripleOptions {
  bool with_similarity = true;
  SimilarityBounds bounds{};
};

/// triple_from_abc of a random surface point, optionally moved by a random
/// similarity.
EquidistantTriple random_equidistant_triple(std::mt19937_64& rng,
                                            const RandomTripleOptions& options = {});
EquidistantTriple random_equidistant_triple(std::uint64_t seed,
                                            const RandomTripleOptions& options = {});

}  // namespace heis
