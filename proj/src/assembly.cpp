#include "sfem/assembly.hpp"

#include "sfem/errors.hpp"

#include <Eigen/Geometry>

#include <stdexcept>
#include <string>
#include <vector>

namespace sfem {

namespace {

using Triplet = Eigen::Triplet<double>;

void require_degree(const QuadratureRule& quad, int min_degree, const char* who) {
  if (quad.degree < min_degree)
    throw std::invalid_argument(std::string(who) + ": quadrature degree must be >= " +
                                std::to_string(min_degree));
}

SparseMatrix from_triplets(int n, const std::vector<Triplet>& triplets) {
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

// Appends the 3x3 element matrix given by `entry(i,j)` for i <= j,
// mirroring the strict upper triangle so the global matrix is symmetric
// to the last bit.
template <typename EntryFn>
void scatter_symmetric(const std::array<int, 3>& t, EntryFn&& entry,
                       std::vector<Triplet>& triplets) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double v = entry(i, j);
      triplets.emplace_back(t[i], t[j], v);
      if (j != i) triplets.emplace_back(t[j], t[i], v);
    }
  }
}

} // namespace

TriangleFrame triangle_frame(const SurfaceMesh& mesh, int tri) {
  const auto& t = mesh.triangles[tri];
  TriangleFrame f;
  f.corner = {mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
  const Vec3 cross = (f.corner[1] - f.corner[0]).cross(f.corner[2] - f.corner[0]);
  const double doubled_area = cross.norm();
  f.area = 0.5 * doubled_area;
  if (f.area < 1e-16)
    throw AssemblyError("degenerate triangle " + std::to_string(tri));
  f.unit_normal = cross / doubled_area;
  // grad of the hat function at corner i is normal x (opposite edge) / 2A
  for (int i = 0; i < 3; ++i) {
    const Vec3 opposite = f.corner[(i + 2) % 3] - f.corner[(i + 1) % 3];
    f.basis_gradient[i] = f.unit_normal.cross(opposite) / doubled_area;
  }
  return f;
}

SparseMatrix assemble_mass(const SurfaceMesh& mesh, const QuadratureRule& quad) {
  require_degree(quad, 2, "assemble_mass");
  std::vector<Triplet> triplets;
  triplets.reserve(9 * mesh.triangles.size());
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    double local[3][3] = {};
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto& bary = quad.points[q];
      const double wq = quad.weights[q] * f.area;
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) local[i][j] += wq * bary[i] * bary[j];
    }
    scatter_symmetric(mesh.triangles[tri], [&](int i, int j) { return local[i][j]; }, triplets);
  }
  return from_triplets(mesh.num_vertices(), triplets);
}

SparseMatrix assemble_stiffness(const SurfaceMesh& mesh) {
  std::vector<Triplet> triplets;
  triplets.reserve(9 * mesh.triangles.size());
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    scatter_symmetric(
        mesh.triangles[tri],
        [&](int i, int j) { return f.area * f.basis_gradient[i].dot(f.basis_gradient[j]); },
        triplets);
  }
  return from_triplets(mesh.num_vertices(), triplets);
}

SparseMatrix assemble_weighted_gradient_form(const SurfaceMesh& mesh, const MatrixField& coeff,
                                             const QuadratureRule& quad) {
  require_degree(quad, 2, "assemble_weighted_gradient_form");
  std::vector<Triplet> triplets;
  triplets.reserve(9 * mesh.triangles.size());
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    double local[3][3] = {};
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const double wq = quad.weights[q] * f.area;
      const Mat3 A = coeff(project(f.point(quad.points[q])));
      for (int i = 0; i < 3; ++i) {
        const Vec3 Agi = A * f.basis_gradient[i];
        for (int j = i; j < 3; ++j) local[i][j] += wq * Agi.dot(f.basis_gradient[j]);
      }
    }
    scatter_symmetric(mesh.triangles[tri], [&](int i, int j) { return local[i][j]; }, triplets);
  }
  return from_triplets(mesh.num_vertices(), triplets);
}

SparseMatrix assemble_weighted_mass(const SurfaceMesh& mesh, const ScalarField& coeff,
                                    const QuadratureRule& quad) {
  require_degree(quad, 2, "assemble_weighted_mass");
  std::vector<Triplet> triplets;
  triplets.reserve(9 * mesh.triangles.size());
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    double local[3][3] = {};
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto& bary = quad.points[q];
      const double wq = quad.weights[q] * f.area * coeff(project(f.point(bary)));
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) local[i][j] += wq * bary[i] * bary[j];
    }
    scatter_symmetric(mesh.triangles[tri], [&](int i, int j) { return local[i][j]; }, triplets);
  }
  return from_triplets(mesh.num_vertices(), triplets);
}

Eigen::VectorXd assemble_load(const SurfaceMesh& mesh, const ScalarField& f,
                              const QuadratureRule& quad) {
  Eigen::VectorXd load = Eigen::VectorXd::Zero(mesh.num_vertices());
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame frame = triangle_frame(mesh, tri);
    const auto& t = mesh.triangles[tri];
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto& bary = quad.points[q];
      const double wq = quad.weights[q] * frame.area * f(project(frame.point(bary)));
      for (int i = 0; i < 3; ++i) load[t[i]] += wq * bary[i];
    }
  }
  return load;
}

Eigen::VectorXd assemble_point_load(const SurfaceMesh& mesh, int vertex, double weight) {
  if (vertex < 0 || vertex >= mesh.num_vertices())
    throw std::out_of_range("assemble_point_load: vertex index out of range");
  Eigen::VectorXd load = Eigen::VectorXd::Zero(mesh.num_vertices());
  load[vertex] = weight;
  return load;
}

FEFunction interpolate(const SurfaceMesh& mesh, const ScalarField& f) {
  FEFunction fe;
  fe.mesh = &mesh;
  fe.coeffs.resize(mesh.num_vertices());
  for (int i = 0; i < mesh.num_vertices(); ++i) fe.coeffs[i] = f(mesh.vertices[i]);
  return fe;
}

FEFunction zero_function(const SurfaceMesh& mesh) {
  FEFunction fe;
  fe.mesh = &mesh;
  fe.coeffs = Eigen::VectorXd::Zero(mesh.num_vertices());
  return fe;
}

} // namespace sfem
