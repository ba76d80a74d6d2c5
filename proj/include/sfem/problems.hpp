#pragma once

#include "sfem/geometry.hpp"

#include <vector>

namespace sfem {

enum class ProblemKind { smooth, delta };

/// Point term of a right-hand-side functional, v |-> weight * v(location).
/// The location must coincide with a mesh vertex at assembly time.
struct PointLoad {
  Vec3 location;
  double weight = 1.0;
};

/// Data of one splitting experiment on the unit sphere.
///
/// The first-equation form is
///   c(u,v) = int  A grad_G u . grad_G v  +  c0 u v,
/// with A = c_gradient_coefficient and c0 = c_mass_coefficient, the
/// coupling form is b(u,v) = int grad_G u . grad_G v + lambda u v, and
/// m is the L2 inner product. Right-hand sides are
///   <f,v> = int f_smooth v + sum_k weight_k v(x_k),   <g,v> = int g_smooth v.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::smooth;
  MatrixField c_gradient_coefficient;
  ScalarField c_mass_coefficient;
  ScalarField f_smooth;
  std::vector<PointLoad> f_points;
  ScalarField g_smooth;
  ScalarField exact_u; // gradient available for both problems
  ScalarField exact_w; // gradient available for the smooth problem only
  double lambda = 1.0;
};

/// Smooth-data experiment: coefficients B = diag(x), C = 2 + x1 x2,
/// exact solution (u, w) = (x3, x1 x2). The gradient coefficient is the
/// pulled-back P B P - 2*Id, so the assembled c-form is indefinite.
ProblemSpec smooth_problem_fields();

/// Point-source experiment: c(u,v) = int -grad u . grad v + 2 u v, a unit
/// point load at the north pole, and an exact solution with a log
/// singularity there. Evaluating the exact fields (or g_smooth) at
/// x3 >= 1 - 1e-14 throws std::domain_error; quadrature rules used with
/// this problem must keep their points away from the pole vertex.
ProblemSpec delta_problem_fields();

} // namespace sfem
