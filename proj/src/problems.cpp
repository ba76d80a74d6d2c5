#include "sfem/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfem {

namespace {

constexpr double kPi = std::numbers::pi;

// Evaluating the log terms at the pole itself would produce -inf; treat a
// small band below x3 = 1 as singular so callers get a clear error instead
// of a huge finite value from roundoff.
double checked_one_minus(double x3) {
  if (x3 >= 1.0 - 1e-14)
    throw std::domain_error("delta problem: field evaluated at the north-pole singularity");
  return 1.0 - x3;
}

} // namespace

ProblemSpec smooth_problem_fields() {
  ProblemSpec spec;
  spec.kind = ProblemKind::smooth;
  spec.lambda = 1.0;

  // (P B P - 2 Id) with B = diag(x1, x2, x3), pulled back along p
  spec.c_gradient_coefficient.value = [](const Vec3& x) {
    const Mat3 P = tangent_projector(x);
    const Mat3 B = x.asDiagonal();
    return (P * B * P - 2.0 * Mat3::Identity()).eval();
  };

  // C - 1 with C = 2 + x1 x2
  spec.c_mass_coefficient.value = [](const Vec3& x) { return 1.0 + x[0] * x[1]; };

  spec.f_smooth.value = [](const Vec3& x) {
    const double x1 = x[0], x2 = x[1], x3 = x[2];
    return -5.0 * x3 * (x1 * x1 * x1 + x2 * x2 * x2 + x3 * x3 * x3) +
           2.0 * x3 * (x1 + x2 + x3) - 4.0 * x3 + 4.0 * x3 * x3 - 1.0 +
           (1.0 + x1 * x2) * x3 + 7.0 * x1 * x2;
  };

  spec.g_smooth.value = [](const Vec3& x) { return 3.0 * x[2] - x[0] * x[1]; };

  // u = x3, extended constant in the normal direction
  spec.exact_u.value = [](const Vec3& x) { return x[2] / x.norm(); };
  spec.exact_u.gradient = [](const Vec3& x) {
    const double r = x.norm();
    return (Vec3::Unit(2) / r - x[2] / (r * r * r) * x).eval();
  };

  // w = x1 x2, likewise
  spec.exact_w.value = [](const Vec3& x) { return x[0] * x[1] / x.squaredNorm(); };
  spec.exact_w.gradient = [](const Vec3& x) {
    const double r2 = x.squaredNorm();
    return (Vec3(x[1], x[0], 0.0) / r2 - 2.0 * x[0] * x[1] / (r2 * r2) * x).eval();
  };

  return spec;
}

ProblemSpec delta_problem_fields() {
  ProblemSpec spec;
  spec.kind = ProblemKind::delta;
  spec.lambda = 1.0;

  spec.c_gradient_coefficient.value = [](const Vec3&) {
    return (-Mat3::Identity()).eval();
  };
  spec.c_mass_coefficient.value = [](const Vec3&) { return 2.0; };

  // <f,v> = v(N) - 1/(4 pi) int v - 3/(4 pi) int x3 v
  spec.f_points.push_back({Vec3(0, 0, 1), 1.0});
  spec.f_smooth.value = [](const Vec3& x) {
    return -1.0 / (4.0 * kPi) - 3.0 * x[2] / (4.0 * kPi);
  };

  // u(x) = 1/(8 pi) [ (1 - x3) log(1 - x3) + 1/2 - log 2 ], g = 3 u
  auto u_profile = [](double x3) {
    const double s = checked_one_minus(x3);
    return ((s * std::log(s)) + 0.5 - std::log(2.0)) / (8.0 * kPi);
  };
  spec.exact_u.value = [u_profile](const Vec3& x) { return u_profile(x[2] / x.norm()); };
  spec.exact_u.gradient = [](const Vec3& x) {
    const double r = x.norm();
    const double s = x[2] / r;
    const double dprofile = -(std::log(checked_one_minus(s)) + 1.0) / (8.0 * kPi);
    // chain rule through the constant-normal extension x3/|x|
    return (dprofile * (Vec3::Unit(2) / r - s / (r * r) * x)).eval();
  };
  spec.g_smooth.value = [u_profile](const Vec3& x) { return 3.0 * u_profile(x[2] / x.norm()); };

  // w(x) = -1/(4 pi) [ log(1 - x3) - log 2 + 1 + 3 x3 / 2 ]; H1 norm of w
  // is not reported, so no gradient is provided.
  spec.exact_w.value = [](const Vec3& x) {
    const double s = x[2] / x.norm();
    return -(std::log(checked_one_minus(s)) - std::log(2.0) + 1.0 + 1.5 * s) / (4.0 * kPi);
  };

  return spec;
}

} // namespace sfem
