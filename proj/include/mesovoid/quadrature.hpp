#pragma once

#include "mesovoid/types.hpp"

#include <vector>

namespace mesovoid {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

// Product rule on a sphere surface: Gauss-Legendre in cos(theta) times a
// uniform (trapezoidal, spectrally accurate for periodic integrands) grid
// in the azimuth.  Weights include the surface element, so
// sum_q w_q f(x_q) approximates the surface integral of f.
struct SphereRule {
  std::vector<Vec3> points;
  std::vector<Vec3> normals; // outward unit normals (radial directions)
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};
SphereRule sphere_surface_rule(const Vec3& center, double radius,
                               int n_polar = 16, int n_azimuth = 32);

// Volume rule on a ball: radial Gauss-Legendre (with the r^2 Jacobian folded
// into the weights) times the surface rule directions.
struct BallRule {
  std::vector<Vec3> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};
BallRule ball_volume_rule(const Vec3& center, double radius, int n_radial = 12,
                          int n_polar = 16, int n_azimuth = 32);

} // namespace mesovoid
