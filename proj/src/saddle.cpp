#include "sfem/saddle.hpp"

#include "sfem/errors.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sfem {

namespace {

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix s = a + b;
  s.makeCompressed();
  return s;
}

double relative_residual(const SparseMatrix& A, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& b) {
  const double scale = b.norm();
  const double res = (A * x - b).norm();
  return scale > 0 ? res / scale : res;
}

// Preconditioned MINRES (Paige-Saunders recurrences) for a symmetric
// operator with an SPD block-diagonal preconditioner diag(K, M).
struct MinresResult {
  Eigen::VectorXd x;
  int iterations = 0;
  bool converged = false;
};

template <typename ApplyPrec>
MinresResult minres(const SparseMatrix& A, const Eigen::VectorXd& b, ApplyPrec&& prec,
                    double rel_tol, int max_iterations) {
  const Eigen::Index n = b.size();
  MinresResult out;
  out.x = Eigen::VectorXd::Zero(n);

  Eigen::VectorXd v_old = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd v = b; // residual of the zero initial guess
  Eigen::VectorXd z = prec(v);
  double gamma_old = 1.0;
  double gamma = std::sqrt(z.dot(v));
  if (!(gamma > 0)) { // b = 0: x = 0 is exact
    out.converged = true;
    return out;
  }
  const double gamma0 = gamma;

  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd w_old = Eigen::VectorXd::Zero(n);
  double eta = gamma;
  double s_old = 0.0, s = 0.0, c_old = 1.0, c = 1.0;

  for (int it = 1; it <= max_iterations; ++it) {
    z /= gamma;
    const Eigen::VectorXd Az = A * z;
    const double delta = z.dot(Az);
    Eigen::VectorXd v_next = Az - (delta / gamma) * v - (gamma / gamma_old) * v_old;
    Eigen::VectorXd z_next = prec(v_next);
    const double gamma_next = std::sqrt(std::max(z_next.dot(v_next), 0.0));

    const double a0 = c * delta - c_old * s * gamma;
    const double a1 = std::sqrt(a0 * a0 + gamma_next * gamma_next);
    const double a2 = s * delta + c_old * c * gamma;
    const double a3 = s_old * gamma;
    if (!(a1 > 0)) throw SolverError("minres: breakdown (zero Givens denominator)");
    const double c_next = a0 / a1;
    const double s_next = gamma_next / a1;

    const Eigen::VectorXd w_next = (z - a3 * w_old - a2 * w) / a1;
    out.x += c_next * eta * w_next;
    eta = -s_next * eta;
    out.iterations = it;

    if (std::abs(eta) <= rel_tol * gamma0) {
      out.converged = true;
      return out;
    }
    if (!(gamma_next > 0)) { // invariant subspace found; solution is exact
      out.converged = true;
      return out;
    }

    v_old.swap(v);
    v.swap(v_next);
    z.swap(z_next);
    gamma_old = gamma;
    gamma = gamma_next;
    w_old = w;
    w = w_next;
    s_old = s;
    s = s_next;
    c_old = c;
    c = c_next;
  }
  return out;
}

} // namespace

SaddleSystem build_system(const ProblemSpec& spec, const SurfaceMesh& mesh,
                          const QuadratureRule& quad) {
  SaddleSystem sys;
  sys.mesh = &mesh;

  const SparseMatrix S = assemble_stiffness(mesh);
  sys.Mmat = assemble_mass(mesh, quad);
  sys.Kmat = add(S, SparseMatrix(spec.lambda * sys.Mmat));
  sys.Cmat = add(assemble_weighted_gradient_form(mesh, spec.c_gradient_coefficient, quad),
                 assemble_weighted_mass(mesh, spec.c_mass_coefficient, quad));

  sys.Fvec = spec.f_smooth.value ? assemble_load(mesh, spec.f_smooth, quad)
                                 : Eigen::VectorXd::Zero(mesh.num_vertices());
  for (const auto& pt : spec.f_points) {
    int vertex = -1;
    try {
      vertex = vertex_at(mesh, pt.location, 1e-10);
    } catch (const LookupError&) {
      throw std::invalid_argument("build_system: point load does not coincide with a mesh vertex");
    }
    sys.Fvec += assemble_point_load(mesh, vertex, pt.weight);
  }
  sys.Gvec = spec.g_smooth.value ? assemble_load(mesh, spec.g_smooth, quad)
                                 : Eigen::VectorXd::Zero(mesh.num_vertices());
  return sys;
}

SparseMatrix block_operator(const SaddleSystem& sys) {
  const int n = sys.dimension();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(sys.Cmat.nonZeros() + 2 * sys.Kmat.nonZeros() +
                                            sys.Mmat.nonZeros()));
  auto scatter = [&](const SparseMatrix& m, int row0, int col0, double factor) {
    for (int k = 0; k < m.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(m, k); it; ++it)
        triplets.emplace_back(row0 + static_cast<int>(it.row()),
                              col0 + static_cast<int>(it.col()), factor * it.value());
  };
  scatter(sys.Cmat, 0, 0, 1.0);
  scatter(sys.Kmat, 0, n, 1.0);
  scatter(sys.Kmat, n, 0, 1.0);
  scatter(sys.Mmat, n, n, -1.0);
  SparseMatrix block(2 * n, 2 * n);
  block.setFromTriplets(triplets.begin(), triplets.end());
  block.makeCompressed();
  return block;
}

SolveReport solve(const SaddleSystem& sys, double tol, SolverKind solver) {
  if (!(tol > 0.0 && tol <= 1e-6))
    throw std::invalid_argument("solve: tol must lie in (0, 1e-6]");

  const int n = sys.dimension();
  const SparseMatrix A = block_operator(sys);
  if (A.nonZeros() == 0)
    throw SolverError("solve: block operator has no entries"); // SparseLU would spin forever
  Eigen::VectorXd rhs(2 * n);
  rhs.head(n) = sys.Fvec;
  rhs.tail(n) = sys.Gvec;

  SolveReport report;
  report.solver = solver;
  Eigen::VectorXd x;

  if (solver == SolverKind::direct) {
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
      throw SolverError("solve: sparse LU factorization of the block operator failed");
    x = lu.solve(rhs);
    x += lu.solve(rhs - A * x); // one refinement step
  } else {
    Eigen::SimplicialLDLT<SparseMatrix> k_solver, m_solver;
    k_solver.compute(sys.Kmat);
    m_solver.compute(sys.Mmat);
    if (k_solver.info() != Eigen::Success || m_solver.info() != Eigen::Success)
      throw SolverError("solve: preconditioner factorization failed");
    auto prec = [&](const Eigen::VectorXd& r) {
      Eigen::VectorXd z(2 * n);
      z.head(n) = k_solver.solve(r.head(n));
      z.tail(n) = m_solver.solve(r.tail(n));
      return z;
    };
    const int cap = std::max(2000, 8 * n);
    MinresResult mr = minres(A, rhs, prec, 0.01 * tol, cap);
    report.iterations = mr.iterations;
    if (!mr.converged) {
      throw SolverError("solve: MINRES did not converge within " + std::to_string(cap) +
                        " iterations (relative residual " +
                        std::to_string(relative_residual(A, mr.x, rhs)) + ")");
    }
    x = std::move(mr.x);
  }

  report.relative_residual = relative_residual(A, x, rhs);
  if (!(report.relative_residual <= tol))
    throw SolverError("solve: residual " + std::to_string(report.relative_residual) +
                      " exceeds requested tolerance");

  report.u.mesh = sys.mesh;
  report.u.coeffs = x.head(n);
  report.w.mesh = sys.mesh;
  report.w.coeffs = x.tail(n);
  return report;
}

namespace {

FEFunction solve_with_b_matrix(const SurfaceMesh& mesh, const Eigen::VectorXd& rhs,
                               const char* who) {
  const SparseMatrix K =
      add(assemble_stiffness(mesh), assemble_mass(mesh, QuadratureRule::edge_midpoint()));
  Eigen::SimplicialLDLT<SparseMatrix> ldlt;
  ldlt.compute(K);
  if (ldlt.info() != Eigen::Success)
    throw SolverError(std::string(who) + ": factorization of S + M failed");
  Eigen::VectorXd x = ldlt.solve(rhs);
  x += ldlt.solve(rhs - K * x);
  const double res = relative_residual(K, x, rhs);
  if (!(res <= 1e-12))
    throw SolverError(std::string(who) + ": residual " + std::to_string(res) + " exceeds 1e-12");
  FEFunction fe;
  fe.mesh = &mesh;
  fe.coeffs = std::move(x);
  return fe;
}

} // namespace

FEFunction apply_Gh(const SurfaceMesh& mesh, const Eigen::VectorXd& rhs) {
  if (rhs.size() != mesh.num_vertices())
    throw std::invalid_argument("apply_Gh: rhs length must equal the vertex count");
  return solve_with_b_matrix(mesh, rhs, "apply_Gh");
}

FEFunction ritz_project(const SurfaceMesh& mesh, const ScalarField& phi,
                        const QuadratureRule& quad) {
  if (!phi.has_gradient())
    throw std::invalid_argument("ritz_project: field must provide an ambient gradient");

  Eigen::VectorXd load = Eigen::VectorXd::Zero(mesh.num_vertices());
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    const TriangleFrame f = triangle_frame(mesh, tri);
    const auto& t = mesh.triangles[tri];
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto& bary = quad.points[q];
      const Vec3 x = f.point(bary);
      const double wq = quad.weights[q] * f.area;
      const Vec3 grad_pullback = f.in_plane(pullback_gradient(phi, x));
      const double val = phi(project(x));
      for (int i = 0; i < 3; ++i)
        load[t[i]] += wq * (grad_pullback.dot(f.basis_gradient[i]) + val * bary[i]);
    }
  }
  return solve_with_b_matrix(mesh, load, "ritz_project");
}

} // namespace sfem
