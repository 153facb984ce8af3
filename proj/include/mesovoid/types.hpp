#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace mesovoid {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat36 = Eigen::Matrix<double, 3, 6>;

// Displacement is a plain 3-vector in Cartesian components.
using Displacement = Vec3;

// Error categories, mapped to CLI exit codes 2/3/4 respectively.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Violated validity gate (diluteness, clearance, Neumann norm bound, ...).
class GateError : public std::runtime_error {
public:
  explicit GateError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Isotropic elastic moduli.  Constructor enforces mu > 0 and a Poisson
// ratio strictly inside (-1, 1/2); both blocks of the stiffness matrix are
// then positive definite and every denominator used downstream is nonzero.
struct LameParams {
  double lambda;
  double mu;

  LameParams(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
    if (!std::isfinite(lambda) || !std::isfinite(mu))
      throw InputError("LameParams: moduli must be finite");
    if (!(mu > 0.0))
      throw InputError("LameParams: shear modulus must be positive");
    const double nu = poisson_ratio();
    if (!(nu > -1.0 && nu < 0.5))
      throw InputError("LameParams: Poisson ratio outside (-1, 1/2)");
    if (!(lambda + 2.0 * mu > 0.0) || !(9.0 * lambda + 14.0 * mu > 0.0))
      throw InputError("LameParams: degenerate modulus combination");
  }

  double poisson_ratio() const { return lambda / (2.0 * (lambda + mu)); }
};

} // namespace mesovoid
