#pragma once

#include <Eigen/Core>

#include <functional>

namespace sfem {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Scalar function on (a neighbourhood of) the unit sphere together with
/// the ambient gradient of a smooth extension. Fields built by this
/// library use the extension that is constant in the normal direction,
/// so `gradient` evaluated on the sphere is already tangential; a plain
/// ambient extension is equally fine since only the tangential part is
/// ever used.
struct ScalarField {
  std::function<double(const Vec3&)> value;
  std::function<Vec3(const Vec3&)> gradient; // may be empty

  bool has_gradient() const { return static_cast<bool>(gradient); }
  double operator()(const Vec3& x) const { return value(x); }
};

/// Symmetric 3x3 matrix-valued coefficient field.
struct MatrixField {
  std::function<Mat3(const Vec3&)> value;

  Mat3 operator()(const Vec3& x) const { return value(x); }
};

/// Closest-point projection onto the unit sphere, p(x) = x/|x|.
Vec3 project(const Vec3& x);

/// Tangent-space projector P = I - x x^T at a unit vector x.
Mat3 tangent_projector(const Vec3& x);

/// Tangential gradient P * grad(f) at a unit vector x.
Vec3 tangential_gradient(const ScalarField& f, const Vec3& x);

/// Ambient gradient of the pullback f o p at a point x off the sphere:
/// J_p(x)^T grad_G f(p(x)) with J_p = (I - x_hat x_hat^T)/|x|.
Vec3 pullback_gradient(const ScalarField& f, const Vec3& x);

ScalarField constant_field(double c);
ScalarField coordinate_field(int axis); // x_1, x_2 or x_3

} // namespace sfem
