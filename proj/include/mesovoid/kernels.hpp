#pragma once

#include "mesovoid/types.hpp"

// Fundamental displacement kernel of the homogeneous isotropic medium and
// the two contracted derivative kernels the interaction model is built on.
//
// dipole_kernel(x, source) is the 3x6 matrix whose column alpha is the
// strain-basis contraction of the source-gradient of the kernel: it gives
// the displacement at x produced by a unit dipole of type alpha placed at
// the source point.  hessian_kernel(x, y) applies the same contraction a
// second time in x, producing the 6x6 strain-at-x-per-dipole-at-y map that
// fills the off-diagonal blocks of the interaction matrix.

namespace mesovoid {

Mat3 gamma(const Vec3& x, const Vec3& y, const LameParams& p);
Mat36 gamma_dipole_kernel(const Vec3& x, const Vec3& source, const LameParams& p);
Mat6 gamma_hessian_kernel(const Vec3& x, const Vec3& y, const LameParams& p);

// Extension point for bounded domains: a Green kernel is the free-space
// kernel minus a smooth corrector, and the solver only consumes these three
// evaluations.
class GreenKernel {
public:
  virtual ~GreenKernel() = default;
  virtual Mat3 evaluate(const Vec3& x, const Vec3& y) const = 0;
  virtual Mat36 dipole_kernel(const Vec3& x, const Vec3& source) const = 0;
  virtual Mat6 hessian_kernel(const Vec3& x, const Vec3& y) const = 0;
};

class FreeSpaceKernel final : public GreenKernel {
public:
  explicit FreeSpaceKernel(const LameParams& p) : p_(p) {}
  Mat3 evaluate(const Vec3& x, const Vec3& y) const override { return gamma(x, y, p_); }
  Mat36 dipole_kernel(const Vec3& x, const Vec3& source) const override {
    return gamma_dipole_kernel(x, source, p_);
  }
  Mat6 hessian_kernel(const Vec3& x, const Vec3& y) const override {
    return gamma_hessian_kernel(x, y, p_);
  }

private:
  LameParams p_;
};

} // namespace mesovoid
