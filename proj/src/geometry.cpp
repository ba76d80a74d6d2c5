#include "sfem/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sfem {

Vec3 project(const Vec3& x) {
  const double r = x.norm();
  if (r <= 1e-13)
    throw std::invalid_argument("project: input too close to the origin");
  return x / r;
}

Mat3 tangent_projector(const Vec3& x) {
  return Mat3::Identity() - x * x.transpose();
}

Vec3 tangential_gradient(const ScalarField& f, const Vec3& x) {
  if (std::abs(x.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("tangential_gradient: point must lie on the unit sphere");
  const Vec3 g = f.gradient(x);
  return g - x.dot(g) * x;
}

Vec3 pullback_gradient(const ScalarField& f, const Vec3& x) {
  const double r = x.norm();
  const Vec3 xhat = project(x);
  const Vec3 g = f.gradient(xhat);
  return (g - xhat.dot(g) * xhat) / r;
}

ScalarField constant_field(double c) {
  return {[c](const Vec3&) { return c; }, [](const Vec3&) { return Vec3::Zero().eval(); }};
}

ScalarField coordinate_field(int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("coordinate_field: axis must be 0, 1 or 2");
  return {[axis](const Vec3& x) { return x[axis]; },
          [axis](const Vec3&) { return Vec3::Unit(axis).eval(); }};
}

} // namespace sfem
