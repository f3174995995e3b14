#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace heis {

/// Triangulated sample of one connected component of the equidistant
/// surface cos a + cos b + cos c = 3/2.
///
/// The component is the central one translated by 2pi * component. It is a
/// two-sheeted graph c = +-arccos(3/2 - cos a - cos b) over the region
/// cos a + cos b >= 1/2, the sheets meeting along c = 0.
struct SurfaceMesh {
  std::vector<std::array<double, 3>> vertices;
  /// Zero-based vertex indices, oriented with outward normals.
  std::vector<std::array<std::size_t, 3>> faces;
  std::array<int, 3> component{0, 0, 0};
  /// Grid nodes (a, b) over which some c exists.
  std::size_t admissible_nodes = 0;
  /// Admissible nodes with c = 0, where the two sheets share one vertex.
  std::size_t seam_nodes = 0;
};

struct SampleOptions {
  /// Grid nodes per axis over [-2pi/3, 2pi/3], endpoints included. >= 8.
  int resolution = 64;
  std::array<int, 3> component{0, 0, 0};
  /// Worker threads for the per-row evaluation; 0 picks the hardware count.
  /// The output does not depend on it.
  unsigned threads = 1;
};

/// Throws DomainError when resolution < 8.
SurfaceMesh sample_surface(const SampleOptions& options);

/// Largest |cos a + cos b + cos c - 3/2| over the vertices.
double max_vertex_residual(const SurfaceMesh& mesh);

/// "a,b,c" header then one row per vertex, 17 significant digits.
void write_csv(std::ostream& out, const SurfaceMesh& mesh);
/// Wavefront OBJ: "v a b c" lines then "f i j k" with 1-based indices.
void write_obj(std::ostream& out, const SurfaceMesh& mesh);

}  // namespace heis
