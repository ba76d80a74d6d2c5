// Acceptance suite: runs every contract criterion end to end and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include "sfem/analysis.hpp"
#include "sfem/report_io.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace sfem;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) ok = false;
    notes.push_back(std::string(condition ? "    ok: " : "    VIOLATED: ") + what);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool in_band(double value, double lo, double hi) { return value >= lo && value <= hi; }

double rel_gap(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

std::string slurp(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  std::stringstream buffer;
  buffer << is.rdbuf();
  return buffer.str();
}

ConvergenceReport study(ProblemKind problem, int min_level, int max_level) {
  StudyConfig config;
  config.problem = problem;
  config.min_level = min_level;
  config.max_level = max_level;
  return run_convergence_study(config);
}

const ErrorRecord* record_at_level(const ConvergenceReport& report, int level) {
  for (const auto& r : report.records)
    if (r.level == level) return &r;
  return nullptr;
}

// --------------------------------------------------------------------

Criterion criterion_1(const ConvergenceReport& smooth, double seconds) {
  Criterion c;
  c.expect(seconds < 120.0, "levels 0-6 ran in " + fmt(seconds) + " s (< 120 s)");
  c.expect(smooth.all_solved, "all levels solved");
  const std::size_t last = smooth.records.size() - 1;
  c.expect(in_band(smooth.eoc_l2_u[last], 1.95, 2.05),
           "EOC(L2,u) finest pair = " + fmt(smooth.eoc_l2_u[last]) + " in [1.95, 2.05]");
  c.expect(in_band(smooth.eoc_h1_u[last], 0.97, 1.03),
           "EOC(H1,u) finest pair = " + fmt(smooth.eoc_h1_u[last]) + " in [0.97, 1.03]");
  c.expect(in_band(smooth.eoc_l2_w[last], 1.95, 2.05),
           "EOC(L2,w) finest pair = " + fmt(smooth.eoc_l2_w[last]) + " in [1.95, 2.05]");
  c.expect(in_band(smooth.eoc_h1_w[last], 0.97, 1.03),
           "EOC(H1,w) finest pair = " + fmt(smooth.eoc_h1_w[last]) + " in [0.97, 1.03]");
  return c;
}

Criterion criterion_2(const ConvergenceReport& smooth) {
  Criterion c;
  const ErrorRecord* r5 = record_at_level(smooth, 5);
  if (!r5 || !r5->solved) {
    c.expect(false, "level 5 record available");
    return c;
  }
  c.expect(rel_gap(r5->err_l2_u, 8.20352e-4) <= 0.20,
           "level-5 L2(u) = " + fmt(r5->err_l2_u) + " within 20% of 8.20352e-4");
  c.expect(rel_gap(r5->err_h1_u, 3.95406e-2) <= 0.20,
           "level-5 H1(u) = " + fmt(r5->err_h1_u) + " within 20% of 3.95406e-2");
  c.expect(rel_gap(r5->err_l2_w, 3.04823e-3) <= 0.20,
           "level-5 L2(w) = " + fmt(r5->err_l2_w) + " within 20% of 3.04823e-3");
  return c;
}

Criterion criterion_3(const ConvergenceReport& delta) {
  Criterion c;
  c.expect(delta.all_solved, "all levels solved");
  const std::size_t last = delta.records.size() - 1;
  c.expect(in_band(delta.eoc_h1_u[last], 0.97, 1.03),
           "EOC(H1,u) finest pair = " + fmt(delta.eoc_h1_u[last]) + " in 1.00 +- 0.03");
  c.expect(in_band(delta.eoc_l2_w[last], 0.97, 1.03),
           "EOC(L2,w) finest pair = " + fmt(delta.eoc_l2_w[last]) + " in 1.00 +- 0.03");
  c.expect(in_band(delta.eoc_l2_u[last], 1.85, 2.05),
           "EOC(L2,u) finest pair = " + fmt(delta.eoc_l2_u[last]) + " in [1.85, 2.05]");
  const ErrorRecord* r5 = record_at_level(delta, 5);
  c.expect(r5 && r5->solved && rel_gap(r5->err_l2_u, 1.37634e-4) <= 0.25,
           "level-5 L2(u) = " + fmt(r5 ? r5->err_l2_u : 0.0) + " within 25% of 1.37634e-4");
  return c;
}

Criterion criterion_4() {
  Criterion c;
  const QuadratureRule assembly = QuadratureRule::edge_midpoint();

  // zero-data solves return zero at levels 1-5
  {
    bool all_zero = true;
    SurfaceMesh mesh = build_octahedron_sphere(1);
    for (int level = 1; level <= 5; ++level) {
      if (level > 1) mesh = refine(mesh);
      for (const auto& spec : {smooth_problem_fields(), delta_problem_fields()}) {
        SaddleSystem sys = build_system(spec, mesh, assembly);
        sys.Fvec.setZero();
        sys.Gvec.setZero();
        const SolveReport sol = solve(sys, 1e-10);
        all_zero = all_zero && sol.u.coeffs.norm() <= 1e-10 && sol.w.coeffs.norm() <= 1e-10;
      }
    }
    c.expect(all_zero, "zero-data solves return zero within tol at levels 1-5");
  }

  // stiffness row sums vanish
  {
    double worst = 0.0;
    SurfaceMesh mesh = build_octahedron_sphere(0);
    for (int level = 0; level <= 5; ++level) {
      if (level > 0) mesh = refine(mesh);
      const SparseMatrix s = assemble_stiffness(mesh);
      worst = std::max(worst,
                       (s * Eigen::VectorXd::Ones(mesh.num_vertices())).cwiseAbs().maxCoeff());
    }
    c.expect(worst < 1e-12, "max |stiffness row sum| = " + fmt(worst) + " < 1e-12");
  }

  // mass SPD through level 6
  {
    bool spd = true;
    SurfaceMesh mesh = build_octahedron_sphere(0);
    for (int level = 0; level <= 6; ++level) {
      if (level > 0) mesh = refine(mesh);
      Eigen::SimplicialLLT<SparseMatrix> llt(assemble_mass(mesh, assembly));
      spd = spd && llt.info() == Eigen::Success;
    }
    c.expect(spd, "mass matrix Cholesky succeeds at levels 0-6");
  }

  // level-0 area
  {
    const SurfaceMesh mesh = build_octahedron_sphere(0);
    double area = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t) area += triangle_frame(mesh, t).area;
    c.expect(std::abs(area - 4.0 * std::sqrt(3.0)) <= 1e-12,
             "octahedron area = " + fmt(area) + " equals 4 sqrt(3) within 1e-12");
  }

  // eigenfunction ratio at level 5
  {
    const SurfaceMesh mesh = build_octahedron_sphere(5);
    const FEFunction u = interpolate(mesh, coordinate_field(2));
    const double ratio = u.coeffs.dot(assemble_stiffness(mesh) * u.coeffs) /
                         u.coeffs.dot(assemble_mass(mesh, assembly) * u.coeffs);
    c.expect(std::abs(ratio - 2.0) <= 0.02,
             "S/M quadratic-form ratio on I_h(x3) = " + fmt(ratio) + " within 1% of 2");
  }

  // Galerkin orthogonality of the Ritz projection
  {
    const SurfaceMesh mesh = build_octahedron_sphere(3);
    const ScalarField phi{[](const Vec3& x) { return std::exp(x[2]); },
                          [](const Vec3& x) { return Vec3(0, 0, std::exp(x[2])).eval(); }};
    const FEFunction projected = ritz_project(mesh, phi, assembly);
    const SparseMatrix k =
        SparseMatrix(assemble_stiffness(mesh) + assemble_mass(mesh, assembly));
    Eigen::VectorXd bload = Eigen::VectorXd::Zero(mesh.num_vertices());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const TriangleFrame f = triangle_frame(mesh, t);
      const auto& tri = mesh.triangles[t];
      for (std::size_t q = 0; q < assembly.size(); ++q) {
        const auto& bary = assembly.points[q];
        const Vec3 x = f.point(bary);
        const double wq = assembly.weights[q] * f.area;
        const Vec3 grad = f.in_plane(pullback_gradient(phi, x));
        for (int i = 0; i < 3; ++i)
          bload[tri[i]] += wq * (grad.dot(f.basis_gradient[i]) + phi(project(x)) * bary[i]);
      }
    }
    const double defect = (bload - k * projected.coeffs).cwiseAbs().maxCoeff();
    c.expect(defect <= 1e-10, "Ritz Galerkin defect = " + fmt(defect) + " <= 1e-10");
  }
  return c;
}

Criterion criterion_5() {
  Criterion c;

  bool infsup_exact = true;
  double infsup_worst = 0.0;
  {
    SurfaceMesh mesh = build_octahedron_sphere(0);
    for (int level = 0; level <= 3; ++level) {
      if (level > 0) mesh = refine(mesh);
      const double gap = std::abs(discrete_inf_sup(mesh, 1.0).beta - 1.0);
      infsup_worst = std::max(infsup_worst, gap);
      infsup_exact = infsup_exact && gap <= 1e-8;
    }
  }
  c.expect(infsup_exact,
           "inf-sup(lambda=1) = 1 within 1e-8 at levels 0-3 (worst gap " + fmt(infsup_worst) +
               ")");

  {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = coercivity_study(ProblemKind::smooth, 1, 3);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double lo = 1e300, hi = 0.0;
    bool positive = true;
    for (const auto& r : rows) {
      positive = positive && r.mu_min > 0.0;
      lo = std::min(lo, r.mu_min);
      hi = std::max(hi, r.mu_min);
    }
    c.expect(positive, "coercivity constant positive at levels 1-3 (min " + fmt(lo) + ")");
    c.expect(hi / lo < 2.0,
             "coercivity spread max/min = " + fmt(hi / lo) + " below a factor 2");
    c.expect(seconds < 30.0, "dense coercivity oracle ran in " + fmt(seconds) + " s (< 30 s)");
  }

  {
    const auto rows = ritz_study(1, 5);
    bool decreasing = true;
    for (std::size_t k = 1; k < rows.size(); ++k)
      decreasing = decreasing && rows[k].max_ratio < rows[k - 1].max_ratio;
    c.expect(decreasing, "Ritz sup-ratio strictly decreasing over levels 1-5 (" +
                             fmt(rows.front().max_ratio) + " ... " + fmt(rows.back().max_ratio) +
                             ")");
  }
  return c;
}

Criterion criterion_6() {
  Criterion c;

  // byte-identical CLI output for identical configs
  const std::string base = std::string(SFEM_CLI_PATH) +
                           " convergence --problem smooth --min-level 0 --max-level 3 --out ";
  const int rc1 = std::system((base + "acc_det_a.csv > /dev/null 2>&1").c_str());
  const int rc2 = std::system((base + "acc_det_b.csv > /dev/null 2>&1").c_str());
  c.expect(WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0, "both CLI runs exit 0");
  c.expect(!slurp("acc_det_a.csv").empty() && slurp("acc_det_a.csv") == slurp("acc_det_b.csv"),
           "table CSV byte-identical across runs");
  c.expect(slurp("acc_det_a.csv.raw") == slurp("acc_det_b.csv.raw"),
           "raw CSV byte-identical across runs");
  for (const char* f : {"acc_det_a.csv", "acc_det_a.csv.raw", "acc_det_b.csv",
                        "acc_det_b.csv.raw"})
    fs::remove(f);

  // repeated in-process studies agree to 10 significant digits
  const ConvergenceReport a = study(ProblemKind::smooth, 0, 3);
  const ConvergenceReport b = study(ProblemKind::smooth, 0, 3);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    for (auto member : {&ErrorRecord::err_l2_u, &ErrorRecord::err_h1_u, &ErrorRecord::err_l2_w,
                        &ErrorRecord::err_h1_w}) {
      const double va = a.records[k].*member, vb = b.records[k].*member;
      if (std::isnan(va) && std::isnan(vb)) continue;
      worst = std::max(worst, std::abs(va - vb) / std::abs(va));
    }
  }
  c.expect(worst <= 1e-10, "repeated studies agree to 10 significant digits (worst rel diff " +
                               fmt(worst) + ")");
  return c;
}

} // namespace

int main() {
  int failures = 0;
  auto report = [&failures](int index, const std::string& title, const Criterion& c) {
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << title << '\n';
    for (const auto& note : c.notes) std::cout << note << '\n';
    if (!c.ok) ++failures;
  };

  const auto start = std::chrono::steady_clock::now();
  const ConvergenceReport smooth = study(ProblemKind::smooth, 0, 6);
  const double smooth_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const ConvergenceReport delta = study(ProblemKind::delta, 0, 6);

  report(1, "smooth problem EOC bands, levels 0-6", criterion_1(smooth, smooth_seconds));
  report(2, "smooth problem level-5 error magnitudes", criterion_2(smooth));
  report(3, "point-source problem EOC bands and level-5 magnitude", criterion_3(delta));
  report(4, "property suite", criterion_4());
  report(5, "hypothesis checks (inf-sup, coercivity, Ritz decay)", criterion_5());
  report(6, "determinism", criterion_6());

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criterion(s) failed")
            << '\n';
  return failures;
}
