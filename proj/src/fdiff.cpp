#include "mesovoid/fdiff.hpp"

#include "mesovoid/elastic_core.hpp"

namespace mesovoid {

Mat3 fd_gradient(const VectorField& field, const Vec3& x, double h) {
  if (!(h > 0.0)) throw InputError("fd_gradient: step must be positive");
  Mat3 g;
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e[k] = h;
    g.col(k) = (field(x + e) - field(x - e)) / (2.0 * h);
  }
  return g;
}

Mat3 richardson_gradient(const VectorField& field, const Vec3& x, double h) {
  const Mat3 coarse = fd_gradient(field, x, h);
  const Mat3 fine = fd_gradient(field, x, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

Vec3 lame_residual(const VectorField& field, const Vec3& x, const LameParams& p,
                   double h) {
  if (!(h > 0.0)) throw InputError("lame_residual: step must be positive");
  // hess[k][l] = d^2 u / dx_k dx_l (3-vector per component pair)
  Vec3 hess[3][3];
  const Vec3 center = field(x);
  for (int k = 0; k < 3; ++k) {
    Vec3 ek = Vec3::Zero();
    ek[k] = h;
    hess[k][k] = (field(x + ek) - 2.0 * center + field(x - ek)) / (h * h);
    for (int l = k + 1; l < 3; ++l) {
      Vec3 el = Vec3::Zero();
      el[l] = h;
      hess[k][l] = (field(x + ek + el) - field(x + ek - el) - field(x - ek + el) +
                    field(x - ek - el)) /
                   (4.0 * h * h);
      hess[l][k] = hess[k][l];
    }
  }
  Vec3 res = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    double lap = 0.0, graddiv = 0.0;
    for (int k = 0; k < 3; ++k) {
      lap += hess[k][k][i];
      graddiv += hess[k][i][k]; // d^2 u_k / dx_k dx_i
    }
    res[i] = p.mu * lap + (p.lambda + p.mu) * graddiv;
  }
  return res;
}

Vec3 fd_traction(const VectorField& field, const Vec3& x, const Vec3& n,
                 const LameParams& p, double h) {
  return traction(fd_gradient(field, x, h), n, p);
}

} // namespace mesovoid
