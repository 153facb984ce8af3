#include "mesovoid/elastic_core.hpp"

#include <cmath>

namespace mesovoid {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

const std::array<Mat3, 6>& strain_basis() {
  static const std::array<Mat3, 6> basis = [] {
    std::array<Mat3, 6> v;
    for (auto& m : v) m.setZero();
    v[0](0, 0) = 1.0;
    v[1](1, 1) = 1.0;
    v[2](2, 2) = 1.0;
    v[3](0, 1) = v[3](1, 0) = kInvSqrt2;
    v[4](0, 2) = v[4](2, 0) = kInvSqrt2;
    v[5](1, 2) = v[5](2, 1) = kInvSqrt2;
    return v;
  }();
  return basis;
}

Mat36 big_xi(const Vec3& x) {
  const auto& v = strain_basis();
  Mat36 xi;
  for (int a = 0; a < 6; ++a) xi.col(a) = v[a] * x;
  return xi;
}

Mat36 small_xi(const Vec3& x) {
  Mat36 m = Mat36::Zero();
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  m(0, 3) = kInvSqrt2 * x[1];
  m(1, 3) = -kInvSqrt2 * x[0];
  m(0, 4) = kInvSqrt2 * x[2];
  m(2, 4) = -kInvSqrt2 * x[0];
  m(1, 5) = kInvSqrt2 * x[2];
  m(2, 5) = -kInvSqrt2 * x[1];
  return m;
}

Mat6 stiffness_matrix(const LameParams& p) {
  Mat6 a = Mat6::Zero();
  a.topLeftCorner<3, 3>().setConstant(p.lambda);
  a.topLeftCorner<3, 3>().diagonal().array() += 2.0 * p.mu;
  a.bottomRightCorner<3, 3>().diagonal().setConstant(2.0 * p.mu);
  return a;
}

Vec6 strain_vector(const Mat3& grad_u) {
  Vec6 e;
  e[0] = grad_u(0, 0);
  e[1] = grad_u(1, 1);
  e[2] = grad_u(2, 2);
  e[3] = kInvSqrt2 * (grad_u(0, 1) + grad_u(1, 0));
  e[4] = kInvSqrt2 * (grad_u(0, 2) + grad_u(2, 0));
  e[5] = kInvSqrt2 * (grad_u(1, 2) + grad_u(2, 1));
  return e;
}

Mat3 strain_to_tensor(const Vec6& e) {
  Mat3 t;
  t(0, 0) = e[0];
  t(1, 1) = e[1];
  t(2, 2) = e[2];
  t(0, 1) = t(1, 0) = kInvSqrt2 * e[3];
  t(0, 2) = t(2, 0) = kInvSqrt2 * e[4];
  t(1, 2) = t(2, 1) = kInvSqrt2 * e[5];
  return t;
}

Vec6 stress_vector(const Vec6& strain, const LameParams& p) {
  return stiffness_matrix(p) * strain;
}

Vec3 traction(const Mat3& grad_u, const Vec3& n, const LameParams& p) {
  if (std::abs(n.norm() - 1.0) > 1e-8)
    throw InputError("traction: normal must be a unit vector");
  return big_xi(n) * stress_vector(strain_vector(grad_u), p);
}

Mat3 rigid_motion_matrix(const Vec3& x) {
  Mat3 j;
  j << 0.0, -x[2], x[1],
       x[2], 0.0, -x[0],
      -x[1], x[0], 0.0;
  return j;
}

double energy_density(const Vec6& strain) { return strain.squaredNorm(); }

} // namespace mesovoid
