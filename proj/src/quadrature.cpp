#include "mesovoid/quadrature.hpp"

#include <cmath>

namespace mesovoid {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw InputError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

SphereRule sphere_surface_rule(const Vec3& center, double radius, int n_polar,
                               int n_azimuth) {
  if (!(radius > 0.0)) throw InputError("sphere_surface_rule: radius must be positive");
  const GaussRule g = gauss_legendre(n_polar);
  SphereRule rule;
  rule.points.reserve(std::size_t(n_polar) * n_azimuth);
  rule.normals.reserve(rule.points.capacity());
  rule.weights.reserve(rule.points.capacity());
  const double dphi = 2.0 * M_PI / n_azimuth;
  for (int i = 0; i < n_polar; ++i) {
    const double ct = g.nodes[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int m = 0; m < n_azimuth; ++m) {
      const double phi = dphi * m;
      const Vec3 dir(st * std::cos(phi), st * std::sin(phi), ct);
      rule.points.push_back(center + radius * dir);
      rule.normals.push_back(dir);
      rule.weights.push_back(radius * radius * g.weights[i] * dphi);
    }
  }
  return rule;
}

BallRule ball_volume_rule(const Vec3& center, double radius, int n_radial,
                          int n_polar, int n_azimuth) {
  if (!(radius > 0.0)) throw InputError("ball_volume_rule: radius must be positive");
  const GaussRule g = gauss_legendre(n_radial);
  const SphereRule unit = sphere_surface_rule(Vec3::Zero(), 1.0, n_polar, n_azimuth);
  BallRule rule;
  rule.points.reserve(unit.size() * n_radial);
  rule.weights.reserve(rule.points.capacity());
  for (int q = 0; q < n_radial; ++q) {
    const double r = 0.5 * radius * (g.nodes[q] + 1.0);
    const double wr = 0.5 * radius * g.weights[q] * r * r;
    for (std::size_t s = 0; s < unit.size(); ++s) {
      rule.points.push_back(center + r * unit.normals[s]);
      rule.weights.push_back(wr * unit.weights[s]);
    }
  }
  return rule;
}

} // namespace mesovoid
