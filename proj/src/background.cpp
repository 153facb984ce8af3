#include "mesovoid/background.hpp"

#include "mesovoid/kernels.hpp"

#include <cmath>

namespace mesovoid {

std::vector<PointForce> BackgroundField::point_forces() const {
  std::vector<PointForce> forces;
  forces.reserve(2 * pairs.size());
  for (const ForcePair& pr : pairs) {
    const Vec3 offset = 0.5 * pr.gap * pr.axis;
    const Vec3 f = pr.magnitude * pr.axis;
    forces.push_back({pr.location + offset, f});
    forces.push_back({pr.location - offset, -f});
  }
  return forces;
}

BackgroundField make_background(std::vector<ForcePair> pairs) {
  for (ForcePair& pr : pairs) {
    const double an = pr.axis.norm();
    if (!(an > 0.0) || !pr.axis.allFinite())
      throw InputError("background: pair axis must be a nonzero vector");
    // Idempotent normalisation: axes already unit to rounding are kept
    // bit-exact so saved fields reload unchanged.
    if (std::abs(an - 1.0) > 1e-12) pr.axis /= an;
    if (!(pr.gap > 0.0)) throw InputError("background: pair gap must be positive");
    if (!std::isfinite(pr.magnitude))
      throw InputError("background: pair magnitude must be finite");
    if (!pr.location.allFinite())
      throw InputError("background: pair location must be finite");
  }
  return BackgroundField{std::move(pairs)};
}

Vec3 background_eval(const BackgroundField& bg, const Vec3& x, const LameParams& p) {
  Vec3 u = Vec3::Zero();
  for (const PointForce& pf : bg.point_forces()) u += gamma(x, pf.position, p) * pf.force;
  return u;
}

Vec6 background_strain(const BackgroundField& bg, const Vec3& x, const LameParams& p) {
  // Columns of the dipole kernel are strain-basis contractions of the
  // source gradient; by the kernel's antisymmetry in its arguments the
  // strain at x of Gamma(x, y) f is -dipole_kernel(x, y)^T f.
  Vec6 e = Vec6::Zero();
  for (const PointForce& pf : bg.point_forces())
    e -= gamma_dipole_kernel(x, pf.position, p).transpose() * pf.force;
  return e;
}

void require_sources_clear(const BackgroundField& bg, const Region& region) {
  for (const PointForce& pf : bg.point_forces()) {
    const double clearance = (pf.position - region.center).norm() - region.radius;
    if (clearance < 1.0)
      throw GateError("background: source point closer than one unit to the cloud region");
  }
}

} // namespace mesovoid
