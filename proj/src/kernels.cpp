#include "mesovoid/kernels.hpp"

#include "mesovoid/elastic_core.hpp"

#include <cmath>

namespace mesovoid {

namespace {

void require_separated(const Vec3& x, const Vec3& y) {
  const double r = (x - y).norm();
  if (!(r > 1e-14 * (1.0 + x.norm() + y.norm())))
    throw InputError("kernel: evaluation and source points coincide");
}

// d Gamma_ij / d rho_k at rho, as a flat array indexed [i][j][k].
using Grad3 = std::array<std::array<std::array<double, 3>, 3>, 3>;

Grad3 gamma_gradient(const Vec3& rho, const LameParams& p) {
  const double r = rho.norm();
  const double r3 = r * r * r;
  const double r5 = r3 * r * r;
  const double kap = 1.0 / (8.0 * M_PI * p.mu * (p.lambda + 2.0 * p.mu));
  const double c1 = p.lambda + 3.0 * p.mu;
  const double c2 = p.lambda + p.mu;
  Grad3 g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double t = -c1 * (i == j ? rho[k] / r3 : 0.0);
        t += c2 * (((i == k ? rho[j] : 0.0) + (j == k ? rho[i] : 0.0)) / r3 -
                   3.0 * rho[i] * rho[j] * rho[k] / r5);
        g[i][j][k] = kap * t;
      }
  return g;
}

// d^2 Gamma_ij / d rho_k d rho_l, indexed [i][j][k][l].
using Hess3 = std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3>;

Hess3 gamma_second(const Vec3& rho, const LameParams& p) {
  const double r = rho.norm();
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double r5 = r3 * r2;
  const double r7 = r5 * r2;
  const double kap = 1.0 / (8.0 * M_PI * p.mu * (p.lambda + 2.0 * p.mu));
  const double c1 = p.lambda + 3.0 * p.mu;
  const double c2 = p.lambda + p.mu;
  const auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  Hess3 h{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double t = -c1 * d(i, j) * (d(k, l) / r3 - 3.0 * rho[k] * rho[l] / r5);
          t += c2 * ((d(i, k) * d(j, l) + d(j, k) * d(i, l)) / r3 -
                     3.0 * (d(i, k) * rho[j] + d(j, k) * rho[i]) * rho[l] / r5 -
                     3.0 * (d(i, l) * rho[j] * rho[k] + d(j, l) * rho[i] * rho[k] +
                            d(k, l) * rho[i] * rho[j]) / r5 +
                     15.0 * rho[i] * rho[j] * rho[k] * rho[l] / r7);
          h[i][j][k][l] = kap * t;
        }
  return h;
}

} // namespace

Mat3 gamma(const Vec3& x, const Vec3& y, const LameParams& p) {
  require_separated(x, y);
  const Vec3 rho = x - y;
  const double r = rho.norm();
  const double kap = 1.0 / (8.0 * M_PI * p.mu * (p.lambda + 2.0 * p.mu));
  Mat3 g = (kap * (p.lambda + 3.0 * p.mu) / r) * Mat3::Identity();
  g += (kap * (p.lambda + p.mu) / (r * r * r)) * (rho * rho.transpose());
  return g;
}

Mat36 gamma_dipole_kernel(const Vec3& x, const Vec3& source, const LameParams& p) {
  require_separated(x, source);
  const Grad3 g = gamma_gradient(source - x, p);
  const auto& basis = strain_basis();
  Mat36 d = Mat36::Zero();
  for (int a = 0; a < 6; ++a)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        const double w = basis[a](i, k);
        if (w == 0.0) continue;
        for (int j = 0; j < 3; ++j) d(j, a) += w * g[i][j][k];
      }
  return d;
}

Mat6 gamma_hessian_kernel(const Vec3& x, const Vec3& y, const LameParams& p) {
  require_separated(x, y);
  const Hess3 h = gamma_second(y - x, p);
  const auto& basis = strain_basis();
  Mat6 k = Mat6::Zero();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
          const double wa = basis[a](j, l);
          if (wa == 0.0) continue;
          for (int i = 0; i < 3; ++i)
            for (int kk = 0; kk < 3; ++kk) {
              const double wb = basis[b](i, kk);
              if (wb == 0.0) continue;
              acc += wa * wb * h[i][j][kk][l];
            }
        }
      // The x-derivative of a function of (y - x) flips the sign.
      k(a, b) = -acc;
    }
  return k;
}

} // namespace mesovoid
