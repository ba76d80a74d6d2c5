#pragma once

#include "sfem/saddle.hpp"

#include <span>
#include <vector>

namespace sfem {

/// L2 error on the discrete surface against the pulled-back exact field,
/// sqrt( int (u_h - exact o p)^2 ). Requires an all-interior quadrature
/// rule of degree >= 4 so the point-source problem's singularity at the
/// pole vertex is never evaluated.
double error_l2(const SurfaceMesh& mesh, const FEFunction& fe, const ScalarField& exact,
                const QuadratureRule& quad);

/// Full H1 error: sqrt( L2^2 + int |grad u_h - P_h J_p^T grad_G exact|^2 ).
double error_h1(const SurfaceMesh& mesh, const FEFunction& fe, const ScalarField& exact,
                const QuadratureRule& quad);

/// Experimental orders of convergence, entry k >= 1 given by
/// log(e_{k-1}/e_k) / log(h_{k-1}/h_k); entry 0 (and any entry whose
/// error is zero or negative) is NaN.
std::vector<double> eoc(const std::vector<double>& errors, const std::vector<double>& hs);

struct InfSupReport {
  int level = 0;
  double lambda = 1.0;
  double beta = 0.0; // equals the second inf-sup constant: b symmetric, X_h = Y_h
};

/// Discrete inf-sup constant of b_lambda = S + lambda M with respect to
/// the discrete H1 norm N = S + M on both sides: the smallest eigenvalue
/// of the pencil (S + lambda M, S + M). Dense eigensolve; level <= 4.
InfSupReport discrete_inf_sup(const SurfaceMesh& mesh, double lambda);

struct CoercivityReport {
  int level = 0;
  double mu_min = 0.0;
};

/// Smallest eigenvalue mu of Q v = mu M v with Q = (K^-1 M)^T C (K^-1 M) + M,
/// the discrete coercivity constant of the splitting form. Dense; level <= 3.
CoercivityReport discrete_coercivity_constant(const ProblemSpec& spec, const SurfaceMesh& mesh);

struct RitzDecayEntry {
  int level = 0;
  double max_ratio = 0.0;
};

/// For each mesh, the maximum over the sample fields of
/// ||psi o p - Pi_h psi||_L2 / ||psi||_H1 (both norms on the discrete
/// surface). The sequence decays like h^2 for smooth samples.
std::vector<RitzDecayEntry> ritz_decay(std::span<const SurfaceMesh> meshes,
                                       std::span<const ScalarField> fields);

/// The fixed smooth proxy set {x1, x3, x1 x2, x1 x2 x3, exp(x3)}.
std::vector<ScalarField> ritz_sample_fields();

// ---------------------------------------------------------------------
// Convergence studies

struct ErrorRecord {
  int level = 0;
  double nominal_h = 0.0;
  double measured_h = 0.0;
  int dofs = 0; // unknowns of the block solve (2V)
  double err_l2_u = 0.0;
  double err_h1_u = 0.0;
  double err_l2_w = 0.0;
  double err_h1_w = 0.0; // NaN for the point-source problem
  double residual = 0.0;
  bool solved = false;
};

struct ConvergenceReport {
  ProblemKind problem = ProblemKind::smooth;
  std::vector<ErrorRecord> records;
  std::vector<double> eoc_l2_u, eoc_h1_u, eoc_l2_w, eoc_h1_w; // NaN where undefined
  bool all_solved = true;
};

struct StudyConfig {
  ProblemKind problem = ProblemKind::smooth;
  int min_level = 0;
  int max_level = 5;
  int quad_assembly = 2;
  int quad_error = 4;
  SolverKind solver = SolverKind::direct;
  double tol = 1e-10;
};

/// Per level: build mesh, assemble, solve, measure errors; EOCs from the
/// nominal h (which halves exactly). A solver failure marks the record
/// and the study keeps going with the remaining levels.
ConvergenceReport run_convergence_study(const StudyConfig& config);

std::vector<InfSupReport> infsup_study(int min_level, int max_level, double lambda);
std::vector<CoercivityReport> coercivity_study(ProblemKind problem, int min_level, int max_level);
std::vector<RitzDecayEntry> ritz_study(int min_level, int max_level);

} // namespace sfem
