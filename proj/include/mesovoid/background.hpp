#pragma once

#include "mesovoid/cloud.hpp"
#include "mesovoid/types.hpp"

#include <vector>

// The incident (cavity-free) displacement field is generated by
// self-equilibrated pairs of opposite point forces: +magnitude*axis at
// location + gap/2*axis and the negative force at location - gap/2*axis.
// The pair construction keeps the total applied force zero, and the field
// decays like |x|^-2 at infinity.

namespace mesovoid {

struct ForcePair {
  Vec3 location = Vec3::Zero();
  Vec3 axis = Vec3::UnitZ(); // unit direction of the pair
  double gap = 1.0;          // distance between the two forces
  double magnitude = 1.0;
};

struct PointForce {
  Vec3 position;
  Vec3 force;
};

struct BackgroundField {
  std::vector<ForcePair> pairs;

  // The two point forces of every pair, in pair order.
  std::vector<PointForce> point_forces() const;
};

// Throws InputError on degenerate pairs (zero axis, non-positive gap,
// non-finite magnitude); normalises the axes.
BackgroundField make_background(std::vector<ForcePair> pairs);

// Displacement of the background field.  Throws InputError at a source point.
Vec3 background_eval(const BackgroundField& bg, const Vec3& x, const LameParams& p);

// Strain 6-vector of the background field, from the closed-form kernel
// derivative (no finite differences).
Vec6 background_strain(const BackgroundField& bg, const Vec3& x, const LameParams& p);

// All source points must clear the cloud region by at least one length unit;
// violations throw GateError.
void require_sources_clear(const BackgroundField& bg, const Region& region);

} // namespace mesovoid
