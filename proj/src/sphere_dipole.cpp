#include "mesovoid/sphere_dipole.hpp"

#include "mesovoid/elastic_core.hpp"
#include "mesovoid/fdiff.hpp"
#include "mesovoid/kernels.hpp"

#include <cmath>

namespace mesovoid {

DipoleMatrix dipole_matrix(double radius, const LameParams& p) {
  if (!(radius > 0.0)) throw InputError("dipole_matrix: radius must be positive");
  const double lam = p.lambda, mu = p.mu;
  const double a3 = radius * radius * radius;
  const double scale = (lam + 2.0 * mu) * M_PI * a3 / (mu * (9.0 * lam + 14.0 * mu));
  const double diag = 9.0 * lam * lam + 20.0 * lam * mu + 36.0 * mu * mu;
  const double off = diag - 40.0 * mu * mu;
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>().setConstant(off);
  m.topLeftCorner<3, 3>().diagonal().setConstant(diag);
  m.bottomRightCorner<3, 3>().diagonal().setConstant(40.0 * mu * mu);
  return DipoleMatrix{-scale * m};
}

namespace detail {

Mat36 dipole_field_unguarded(const Vec3& x, const Void& v, const LameParams& p) {
  const Vec3 r = x - v.center;
  const double rn = r.norm();
  if (!(rn > 1e-14 * (1.0 + x.norm() + v.center.norm())))
    throw InputError("dipole_field: evaluation point at cavity centre");
  const double lam = p.lambda, mu = p.mu;
  const double a = v.radius;
  const double a5 = a * a * a * a * a;
  const double c = (lam + mu) * a5 / (9.0 * lam + 14.0 * mu);
  const double inv5 = 1.0 / (rn * rn * rn * rn * rn);
  const double inv7 = inv5 / (rn * rn);

  const Mat36 xi = big_xi(r);

  // Leading many-body part: dipole kernel times the polarisation matrix.
  Mat36 q = gamma_dipole_kernel(x, v.center, p) * dipole_matrix(a, p).m;

  // |r|^-5 correction.
  Mat6 corr5 = Mat6::Zero();
  corr5.topLeftCorner<3, 3>().setConstant(-3.0 * c);
  corr5.topLeftCorner<3, 3>().diagonal().setConstant(-9.0 * c);
  corr5.bottomRightCorner<3, 3>().diagonal().setConstant(-6.0 * c);
  q += inv5 * (xi * corr5);

  // |r|^-7 corrections: squared-coordinate block, antidiagonal coupling of
  // the shear columns, and a diagonal reweighting of the shear columns.
  const Vec3 r2(r[0] * r[0], r[1] * r[1], r[2] * r[2]);
  Mat6 y = Mat6::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y(i, j) = 15.0 * c * r2[j];

  Mat36 anti = Mat36::Zero();
  anti(0, 5) = anti(1, 4) = anti(2, 3) = 15.0 * std::sqrt(2.0) * c;

  Mat36 shear = Mat36::Zero();
  shear.rightCols<3>() = (30.0 * c) * (r2.asDiagonal() * xi.rightCols<3>());

  q += inv7 * (xi * y + r[0] * r[1] * r[2] * anti + shear);
  return q;
}

} // namespace detail

Mat36 dipole_field(const Vec3& x, const Void& v, const LameParams& p) {
  if (!(v.radius > 0.0)) throw InputError("dipole_field: radius must be positive");
  if ((x - v.center).norm() <= v.radius)
    throw GateError("dipole_field: point inside or on the cavity");
  return detail::dipole_field_unguarded(x, v, p);
}

OrthogonalityReport check_orthogonality(const Void& v, const LameParams& p,
                                        int n_polar, int n_azimuth,
                                        double fd_step_scale) {
  if (!(v.radius > 0.0)) throw InputError("check_orthogonality: radius must be positive");
  const SphereRule rule = sphere_surface_rule(v.center, v.radius, n_polar, n_azimuth);
  const double h = fd_step_scale * v.radius;
  Mat36 force = Mat36::Zero();
  Mat36 moment = Mat36::Zero();
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Vec3& xs = rule.points[q];
    const Vec3 n = -rule.normals[q]; // outward normal of the exterior domain
    Mat36 tq;
    for (int col = 0; col < 6; ++col) {
      auto column = [&](const Vec3& pt) -> Vec3 {
        return detail::dipole_field_unguarded(pt, v, p).col(col);
      };
      tq.col(col) = fd_traction(column, xs, n, p, h);
    }
    force += rule.weights[q] * tq;
    moment += rule.weights[q] * (rigid_motion_matrix(xs - v.center) * tq);
  }
  return {force.cwiseAbs().maxCoeff(), moment.cwiseAbs().maxCoeff()};
}

} // namespace mesovoid
