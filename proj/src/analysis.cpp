#include "sfem/analysis.hpp"

#include "sfem/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfem {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_error_rule(const QuadratureRule& quad, const char* who) {
  if (quad.degree < 4 || !quad.all_interior())
    throw std::invalid_argument(std::string(who) +
                                ": error integration needs an all-interior rule of degree >= 4");
}

double fe_value(const FEFunction& fe, const std::array<int, 3>& t,
                const std::array<double, 3>& bary) {
  return bary[0] * fe.coeffs[t[0]] + bary[1] * fe.coeffs[t[1]] + bary[2] * fe.coeffs[t[2]];
}

Eigen::MatrixXd dense(const SparseMatrix& m) { return Eigen::MatrixXd(m); }

} // namespace

double error_l2(const SurfaceMesh& mesh, const FEFunction& fe, const ScalarField& exact,
                const QuadratureRule& quad) {
  require_error_rule(quad, "error_l2");
  double acc = 0.0;
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    const auto& t = mesh.triangles[tri];
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto& bary = quad.points[q];
      const double diff = fe_value(fe, t, bary) - exact(project(f.point(bary)));
      acc += quad.weights[q] * f.area * diff * diff;
    }
  }
  return std::sqrt(acc);
}

double error_h1(const SurfaceMesh& mesh, const FEFunction& fe, const ScalarField& exact,
                const QuadratureRule& quad) {
  require_error_rule(quad, "error_h1");
  if (!exact.has_gradient())
    throw std::invalid_argument("error_h1: exact field must provide an ambient gradient");
  double acc = 0.0;
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    const auto& t = mesh.triangles[tri];
    const Vec3 grad_fe = fe.coeffs[t[0]] * f.basis_gradient[0] +
                         fe.coeffs[t[1]] * f.basis_gradient[1] +
                         fe.coeffs[t[2]] * f.basis_gradient[2];
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto& bary = quad.points[q];
      const Vec3 x = f.point(bary);
      const double vdiff = fe_value(fe, t, bary) - exact(project(x));
      const Vec3 gdiff = grad_fe - f.in_plane(pullback_gradient(exact, x));
      acc += quad.weights[q] * f.area * (vdiff * vdiff + gdiff.squaredNorm());
    }
  }
  return std::sqrt(acc);
}

std::vector<double> eoc(const std::vector<double>& errors, const std::vector<double>& hs) {
  if (errors.size() != hs.size() || errors.size() < 2)
    throw std::invalid_argument("eoc: need equally sized lists with at least two entries");
  for (double h : hs)
    if (!(h > 0)) throw std::invalid_argument("eoc: mesh sizes must be positive");
  std::vector<double> out(errors.size(), kNaN);
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (!(errors[k - 1] > 0) || !(errors[k] > 0) || !std::isfinite(errors[k - 1]) ||
        !std::isfinite(errors[k]))
      continue; // undefined-EOC marker stays NaN
    out[k] = std::log(errors[k - 1] / errors[k]) / std::log(hs[k - 1] / hs[k]);
  }
  return out;
}

InfSupReport discrete_inf_sup(const SurfaceMesh& mesh, double lambda) {
  if (mesh.level > 4)
    throw std::invalid_argument("discrete_inf_sup: dense eigensolve guarded to level <= 4");
  if (!(lambda > 0)) throw std::invalid_argument("discrete_inf_sup: lambda must be positive");

  const Eigen::MatrixXd S = dense(assemble_stiffness(mesh));
  const Eigen::MatrixXd M = dense(assemble_mass(mesh, QuadratureRule::edge_midpoint()));
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(S + lambda * M, S + M,
                                                               Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw SolverError("discrete_inf_sup: generalized eigensolve failed");
  return {mesh.level, lambda, es.eigenvalues().minCoeff()};
}

CoercivityReport discrete_coercivity_constant(const ProblemSpec& spec, const SurfaceMesh& mesh) {
  if (mesh.level > 3)
    throw std::invalid_argument(
        "discrete_coercivity_constant: dense eigensolve guarded to level <= 3");

  const QuadratureRule quad = QuadratureRule::edge_midpoint();
  const Eigen::MatrixXd S = dense(assemble_stiffness(mesh));
  const Eigen::MatrixXd M = dense(assemble_mass(mesh, quad));
  const Eigen::MatrixXd K = S + spec.lambda * M;
  const Eigen::MatrixXd C =
      dense(assemble_weighted_gradient_form(mesh, spec.c_gradient_coefficient, quad)) +
      dense(assemble_weighted_mass(mesh, spec.c_mass_coefficient, quad));

  Eigen::LDLT<Eigen::MatrixXd> kfac(K);
  if (kfac.info() != Eigen::Success || !kfac.isPositive())
    throw SolverError("discrete_coercivity_constant: K = S + lambda M is not SPD");
  const Eigen::MatrixXd G = kfac.solve(M); // v -> G_h m(v, .)
  Eigen::MatrixXd Q = G.transpose() * C * G + M;
  Q = 0.5 * (Q + Q.transpose());

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Q, M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw SolverError("discrete_coercivity_constant: generalized eigensolve failed");
  return {mesh.level, es.eigenvalues().minCoeff()};
}

std::vector<ScalarField> ritz_sample_fields() {
  std::vector<ScalarField> fields;
  fields.push_back(coordinate_field(0));
  fields.push_back(coordinate_field(2));
  fields.push_back({[](const Vec3& x) { return x[0] * x[1]; },
                    [](const Vec3& x) { return Vec3(x[1], x[0], 0.0).eval(); }});
  fields.push_back({[](const Vec3& x) { return x[0] * x[1] * x[2]; },
                    [](const Vec3& x) {
                      return Vec3(x[1] * x[2], x[0] * x[2], x[0] * x[1]).eval();
                    }});
  fields.push_back({[](const Vec3& x) { return std::exp(x[2]); },
                    [](const Vec3& x) { return Vec3(0.0, 0.0, std::exp(x[2])).eval(); }});
  return fields;
}

std::vector<RitzDecayEntry> ritz_decay(std::span<const SurfaceMesh> meshes,
                                       std::span<const ScalarField> fields) {
  if (meshes.size() < 2)
    throw std::invalid_argument("ritz_decay: need at least two refinement levels");
  const QuadratureRule assembly_rule = QuadratureRule::edge_midpoint();
  const QuadratureRule error_rule = QuadratureRule::interior_6pt();

  std::vector<RitzDecayEntry> out;
  out.reserve(meshes.size());
  for (const SurfaceMesh& mesh : meshes) {
    double worst = 0.0;
    for (const ScalarField& psi : fields) {
      const FEFunction projected = ritz_project(mesh, psi, assembly_rule);
      const double num = error_l2(mesh, projected, psi, error_rule);
      const double den = error_h1(mesh, zero_function(mesh), psi, error_rule);
      worst = std::max(worst, num / den);
    }
    out.push_back({mesh.level, worst});
  }
  return out;
}

ConvergenceReport run_convergence_study(const StudyConfig& config) {
  if (config.min_level < 0 || config.min_level > config.max_level || config.max_level > 8)
    throw std::invalid_argument("run_convergence_study: need 0 <= min_level <= max_level <= 8");

  const ProblemSpec spec = config.problem == ProblemKind::smooth ? smooth_problem_fields()
                                                                 : delta_problem_fields();
  const QuadratureRule assembly_rule = QuadratureRule::for_degree(config.quad_assembly);
  const QuadratureRule error_rule = QuadratureRule::for_degree(config.quad_error);

  ConvergenceReport report;
  report.problem = config.problem;

  SurfaceMesh mesh = build_octahedron_sphere(config.min_level);
  for (int level = config.min_level; level <= config.max_level; ++level) {
    if (level > config.min_level) mesh = refine(mesh);

    ErrorRecord rec;
    rec.level = level;
    rec.nominal_h = mesh.nominal_h();
    rec.measured_h = measured_h(mesh);
    rec.dofs = 2 * mesh.num_vertices();
    rec.err_l2_u = rec.err_h1_u = rec.err_l2_w = rec.err_h1_w = kNaN;
    rec.residual = kNaN;

    try {
      const SaddleSystem system = build_system(spec, mesh, assembly_rule);
      const SolveReport sol = solve(system, config.tol, config.solver);
      rec.solved = true;
      rec.residual = sol.relative_residual;
      rec.err_l2_u = error_l2(mesh, sol.u, spec.exact_u, error_rule);
      rec.err_h1_u = error_h1(mesh, sol.u, spec.exact_u, error_rule);
      rec.err_l2_w = error_l2(mesh, sol.w, spec.exact_w, error_rule);
      if (spec.exact_w.has_gradient())
        rec.err_h1_w = error_h1(mesh, sol.w, spec.exact_w, error_rule);
    } catch (const SolverError&) {
      rec.solved = false;
      report.all_solved = false;
    }
    report.records.push_back(rec);
  }

  std::vector<double> hs, e0, e1, e2, e3;
  for (const auto& r : report.records) {
    hs.push_back(r.nominal_h);
    e0.push_back(r.err_l2_u);
    e1.push_back(r.err_h1_u);
    e2.push_back(r.err_l2_w);
    e3.push_back(r.err_h1_w);
  }
  if (report.records.size() >= 2) {
    report.eoc_l2_u = eoc(e0, hs);
    report.eoc_h1_u = eoc(e1, hs);
    report.eoc_l2_w = eoc(e2, hs);
    report.eoc_h1_w = eoc(e3, hs);
  } else {
    const std::vector<double> none(report.records.size(), kNaN);
    report.eoc_l2_u = report.eoc_h1_u = report.eoc_l2_w = report.eoc_h1_w = none;
  }
  return report;
}

std::vector<InfSupReport> infsup_study(int min_level, int max_level, double lambda) {
  if (min_level < 0 || min_level > max_level)
    throw std::invalid_argument("infsup_study: bad level range");
  std::vector<InfSupReport> out;
  SurfaceMesh mesh = build_octahedron_sphere(min_level);
  for (int level = min_level; level <= max_level; ++level) {
    if (level > min_level) mesh = refine(mesh);
    out.push_back(discrete_inf_sup(mesh, lambda));
  }
  return out;
}

std::vector<CoercivityReport> coercivity_study(ProblemKind problem, int min_level, int max_level) {
  if (min_level < 0 || min_level > max_level)
    throw std::invalid_argument("coercivity_study: bad level range");
  const ProblemSpec spec =
      problem == ProblemKind::smooth ? smooth_problem_fields() : delta_problem_fields();
  std::vector<CoercivityReport> out;
  SurfaceMesh mesh = build_octahedron_sphere(min_level);
  for (int level = min_level; level <= max_level; ++level) {
    if (level > min_level) mesh = refine(mesh);
    out.push_back(discrete_coercivity_constant(spec, mesh));
  }
  return out;
}

std::vector<RitzDecayEntry> ritz_study(int min_level, int max_level) {
  if (min_level < 0 || min_level > max_level)
    throw std::invalid_argument("ritz_study: bad level range");
  std::vector<SurfaceMesh> meshes;
  meshes.push_back(build_octahedron_sphere(min_level));
  for (int level = min_level + 1; level <= max_level; ++level)
    meshes.push_back(refine(meshes.back()));
  const auto fields = ritz_sample_fields();
  return ritz_decay(meshes, fields);
}

} // namespace sfem
