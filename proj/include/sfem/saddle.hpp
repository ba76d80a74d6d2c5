#pragma once

#include "sfem/assembly.hpp"
#include "sfem/problems.hpp"

namespace sfem {

enum class SolverKind { direct, iterative };

/// Assembled blocks of the coupled system
///   [ C  K ] [u]   [F]
///   [ K -M ] [w] = [G]
/// with K = S + lambda M the b-form matrix and M the mass matrix.
struct SaddleSystem {
  const SurfaceMesh* mesh = nullptr;
  SparseMatrix Cmat;
  SparseMatrix Kmat;
  SparseMatrix Mmat;
  Eigen::VectorXd Fvec;
  Eigen::VectorXd Gvec;

  int dimension() const { return static_cast<int>(Kmat.rows()); }
};

struct SolveReport {
  FEFunction u;
  FEFunction w;
  double relative_residual = 0.0;
  int iterations = 0; // 0 for the direct solver
  SolverKind solver = SolverKind::direct;
};

/// Assembles all five blocks for the given experiment. Point loads must
/// coincide with mesh vertices (within 1e-10), otherwise
/// std::invalid_argument is thrown.
SaddleSystem build_system(const ProblemSpec& spec, const SurfaceMesh& mesh,
                          const QuadratureRule& quad);

/// The 2V x 2V block operator [[C, K], [K, -M]].
SparseMatrix block_operator(const SaddleSystem& system);

/// Solves the block system to relative residual <= tol (tol in (0, 1e-6]).
/// The direct mode factorizes the full symmetric indefinite operator; the
/// iterative mode runs MINRES with a block-diagonal preconditioner built
/// from K and M. Failure to factorize or converge raises SolverError.
SolveReport solve(const SaddleSystem& system, double tol,
                  SolverKind solver = SolverKind::direct);

/// Discrete b-inverse: coefficients g with (S + M) g = rhs, solved to
/// relative residual <= 1e-12.
FEFunction apply_Gh(const SurfaceMesh& mesh, const Eigen::VectorXd& rhs);

/// Ritz projection onto the P1 space: solves K c = l with
/// l_i = int grad (phi o p) . grad phi_i + (phi o p) phi_i, where the
/// pullback gradient is evaluated by the chain rule through p.
FEFunction ritz_project(const SurfaceMesh& mesh, const ScalarField& phi,
                        const QuadratureRule& quad);

} // namespace sfem
