#pragma once

#include <Eigen/Core>

#include <array>
#include <string>
#include <vector>

namespace sfem {

using Vec3 = Eigen::Vector3d;

/// Triangulated unit sphere with all vertices on the exact surface.
///
/// The mesh family is the regular octahedron refined by edge-midpoint
/// subdivision with new vertices projected radially onto the sphere.
/// Vertex ordering is canonical and part of the contract: the six
/// octahedron vertices come first in the order (+x,-x,+y,-y,+z,-z),
/// followed by midpoints in edge-creation order. In particular the
/// north pole (0,0,1) is vertex 4 at every level.
struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles; // counterclockwise from outside
  int level = 0;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int num_edges() const; // V - 2 + F by Euler, computed from counts

  /// h of the unrefined octahedron halved per level: sqrt(2) / 2^level.
  double nominal_h() const;
};

/// Index of the north-pole vertex (0,0,1) in the canonical ordering.
inline constexpr int kNorthPoleVertex = 4;

SurfaceMesh build_octahedron_sphere(int level);
SurfaceMesh refine(const SurfaceMesh& mesh);

/// Maximum Euclidean edge length over the triangulation.
double measured_h(const SurfaceMesh& mesh);

/// The unique vertex within `tol` of `point`. Throws LookupError when
/// none or more than one vertex qualifies.
int vertex_at(const SurfaceMesh& mesh, const Vec3& point, double tol);

/// ASCII OFF export ("OFF", counts line "V F E", vertices, faces).
void export_off(const SurfaceMesh& mesh, const std::string& path);

} // namespace sfem
