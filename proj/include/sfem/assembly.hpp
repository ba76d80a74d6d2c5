#pragma once

#include "sfem/geometry.hpp"
#include "sfem/mesh.hpp"
#include "sfem/quadrature.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <array>

namespace sfem {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// P1 function on the discrete surface: one coefficient per vertex.
struct FEFunction {
  const SurfaceMesh* mesh = nullptr;
  Eigen::VectorXd coeffs;
};

/// Flat-triangle geometry used by assembly and error integration.
struct TriangleFrame {
  std::array<Vec3, 3> corner;
  Vec3 unit_normal; // outward
  double area = 0.0;
  std::array<Vec3, 3> basis_gradient; // in-plane gradients of the hat functions

  Vec3 point(const std::array<double, 3>& bary) const {
    return bary[0] * corner[0] + bary[1] * corner[1] + bary[2] * corner[2];
  }

  /// Projection onto the triangle plane.
  Vec3 in_plane(const Vec3& v) const { return v - unit_normal.dot(v) * unit_normal; }
};

/// Throws AssemblyError for degenerate triangles (area < 1e-16).
TriangleFrame triangle_frame(const SurfaceMesh& mesh, int tri);

/// Mass matrix, entries int phi_i phi_j. Requires quadrature degree >= 2
/// (then exact for P1); symmetric by construction.
SparseMatrix assemble_mass(const SurfaceMesh& mesh, const QuadratureRule& quad);

/// Gradient part of the b-form, entries int grad phi_i . grad phi_j,
/// integrated exactly (P1 gradients are constant per triangle).
SparseMatrix assemble_stiffness(const SurfaceMesh& mesh);

/// Entries int grad phi_i . A(p(x)) grad phi_j with the coefficient
/// evaluated at lifted quadrature points. A must be symmetric (the
/// result is symmetrized by construction).
SparseMatrix assemble_weighted_gradient_form(const SurfaceMesh& mesh, const MatrixField& coeff,
                                             const QuadratureRule& quad);

/// Entries int c(p(x)) phi_i phi_j.
SparseMatrix assemble_weighted_mass(const SurfaceMesh& mesh, const ScalarField& coeff,
                                    const QuadratureRule& quad);

/// Load vector, entries int f(p(x)) phi_i.
Eigen::VectorXd assemble_load(const SurfaceMesh& mesh, const ScalarField& f,
                              const QuadratureRule& quad);

/// Point functional v |-> weight * v(vertex): `weight` at `vertex`,
/// zeros elsewhere.
Eigen::VectorXd assemble_point_load(const SurfaceMesh& mesh, int vertex, double weight);

/// Lagrange interpolant I_h f: nodal values at the mesh vertices.
FEFunction interpolate(const SurfaceMesh& mesh, const ScalarField& f);

FEFunction zero_function(const SurfaceMesh& mesh);

} // namespace sfem
