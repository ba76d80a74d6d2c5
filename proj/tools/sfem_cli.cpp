// Batch front-end: convergence studies, hypothesis checks and mesh export
// for the second-order splitting method on the unit sphere.

#include "sfem/analysis.hpp"
#include "sfem/errors.hpp"
#include "sfem/report_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string problem = "smooth";
  int min_level = 0;
  int max_level = 5;
  int quad_assembly = 2;
  int quad_error = 4;
  std::string solver = "direct";
  double tol = 1e-10;
  double lambda = 1.0;
  std::string format = "csv";
  std::string out;
};

void validate(const Options& opt) {
  if (opt.min_level < 0 || opt.min_level > opt.max_level || opt.max_level > 8)
    throw std::invalid_argument("levels must satisfy 0 <= min-level <= max-level <= 8");
  if (!(opt.tol > 0 && opt.tol <= 1e-6))
    throw std::invalid_argument("tol must lie in (0, 1e-6]");
}

sfem::ProblemKind problem_kind(const std::string& name) {
  if (name == "smooth") return sfem::ProblemKind::smooth;
  if (name == "delta") return sfem::ProblemKind::delta;
  throw std::invalid_argument("unknown problem '" + name + "' (expected smooth or delta)");
}

sfem::SolverKind solver_kind(const std::string& name) {
  if (name == "direct") return sfem::SolverKind::direct;
  if (name == "iterative") return sfem::SolverKind::iterative;
  throw std::invalid_argument("unknown solver '" + name + "' (expected direct or iterative)");
}

sfem::TableFormat table_format(const std::string& name) {
  if (name == "csv") return sfem::TableFormat::csv;
  if (name == "md") return sfem::TableFormat::md;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or md)");
}

// Table to stdout; with --out also the file plus a full-precision
// companion at <out>.raw.
template <typename FormatFn>
void emit(const Options& opt, FormatFn&& format_with_precision) {
  const sfem::TableFormat fmt = table_format(opt.format);
  const std::string table = format_with_precision(fmt, 6);
  std::cout << table;
  if (!opt.out.empty()) {
    sfem::write_text_file(opt.out, table);
    sfem::write_text_file(opt.out + ".raw", format_with_precision(fmt, 17));
  }
}

int cmd_convergence(const Options& opt) {
  validate(opt);
  sfem::StudyConfig config;
  config.problem = problem_kind(opt.problem);
  config.min_level = opt.min_level;
  config.max_level = opt.max_level;
  config.quad_assembly = opt.quad_assembly;
  config.quad_error = opt.quad_error;
  config.solver = solver_kind(opt.solver);
  config.tol = opt.tol;

  const sfem::ConvergenceReport report = sfem::run_convergence_study(config);
  emit(opt, [&](sfem::TableFormat f, int p) { return sfem::format_convergence(report, f, p); });
  return report.all_solved ? kExitOk : kExitSolver;
}

int cmd_infsup(const Options& opt) {
  validate(opt);
  const auto rows = sfem::infsup_study(opt.min_level, opt.max_level, opt.lambda);
  emit(opt, [&](sfem::TableFormat f, int p) { return sfem::format_infsup(rows, f, p); });
  return kExitOk;
}

int cmd_coercivity(const Options& opt) {
  validate(opt);
  const auto rows =
      sfem::coercivity_study(problem_kind(opt.problem), opt.min_level, opt.max_level);
  emit(opt, [&](sfem::TableFormat f, int p) { return sfem::format_coercivity(rows, f, p); });
  return kExitOk;
}

int cmd_ritz(const Options& opt) {
  validate(opt);
  const auto rows = sfem::ritz_study(opt.min_level, opt.max_level);
  emit(opt, [&](sfem::TableFormat f, int p) { return sfem::format_ritz(rows, f, p); });
  return kExitOk;
}

int cmd_mesh(const Options& opt) {
  validate(opt);
  const sfem::SurfaceMesh mesh = sfem::build_octahedron_sphere(opt.max_level);
  std::cout << "level " << mesh.level << ": V=" << mesh.num_vertices()
            << " E=" << mesh.num_edges() << " F=" << mesh.num_triangles()
            << " h_nominal=" << mesh.nominal_h() << " h_measured=" << sfem::measured_h(mesh)
            << '\n';
  if (!opt.out.empty()) sfem::export_off(mesh, opt.out);
  return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_problem, bool with_solver) {
  cmd->add_option("--min-level", opt.min_level, "coarsest refinement level");
  cmd->add_option("--max-level", opt.max_level, "finest refinement level");
  if (with_problem) cmd->add_option("--problem", opt.problem, "smooth or delta");
  if (with_solver) {
    cmd->add_option("--quad-assembly", opt.quad_assembly, "assembly quadrature degree");
    cmd->add_option("--quad-error", opt.quad_error, "error quadrature degree");
    cmd->add_option("--solver", opt.solver, "direct or iterative");
    cmd->add_option("--tol", opt.tol, "solver relative residual tolerance");
  }
  cmd->add_option("--format", opt.format, "csv or md");
  cmd->add_option("--out", opt.out, "output file (also writes <out>.raw)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"second-order splitting SFEM on the unit sphere"};
  app.require_subcommand(1);

  Options opt;
  auto* convergence =
      app.add_subcommand("convergence", "errors and EOCs over a range of levels");
  add_common_options(convergence, opt, true, true);
  auto* infsup = app.add_subcommand("infsup", "discrete inf-sup constants per level");
  add_common_options(infsup, opt, false, false);
  infsup->add_option("--lambda", opt.lambda, "b-form zero-order constant");
  auto* coercivity =
      app.add_subcommand("coercivity", "discrete coercivity constants per level");
  add_common_options(coercivity, opt, true, false);
  auto* ritz = app.add_subcommand("ritz", "Ritz projection sup-ratio decay per level");
  add_common_options(ritz, opt, false, false);
  auto* mesh = app.add_subcommand("mesh", "export the sphere mesh at --max-level as OFF");
  add_common_options(mesh, opt, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (convergence->parsed()) return cmd_convergence(opt);
    if (infsup->parsed()) return cmd_infsup(opt);
    if (coercivity->parsed()) return cmd_coercivity(opt);
    if (ritz->parsed()) return cmd_ritz(opt);
    if (mesh->parsed()) return cmd_mesh(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sfem::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const sfem::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitConfig;
}
