#pragma once

#include "mesovoid/sphere_dipole.hpp"
#include "mesovoid/types.hpp"

#include <cstdint>
#include <vector>

// A cloud is a finite family of small spherical cavities inside a spherical
// region, together with the separation scale d and the elastic moduli of the
// matrix.  Geometry is kept dimensionless: the far-field and source-clearance
// margins are one length unit.

namespace mesovoid {

struct Region {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

struct Cloud {
  LameParams params;
  double d = 0.0; // minimum centre separation is 2*d
  Region region;
  std::vector<Void> voids;

  std::size_t size() const { return voids.size(); }
};

struct CloudReport {
  double min_separation;   // smallest centre-to-centre distance (inf if n < 2)
  double min_clearance;    // smallest distance from a cavity surface to the region boundary
  double max_radius_ratio; // max radius / d
  bool separation_ok;
  bool clearance_ok;
  bool gate_ok;

  bool pass() const { return separation_ok && clearance_ok && gate_ok; }
};

// Checks min separation >= 2d, cavity-to-boundary clearance >= 2d and the
// diluteness gate max radius < gate_c * d.  Small negative slack (1e-12
// relative) is tolerated so round-tripped files revalidate.
CloudReport validate_cloud(const Cloud& c, double gate_c = 0.2);

// Seeded rejection sampling of n cavity centres in the region, all with
// radius eps.  Gate violations and infeasible packings throw GateError;
// output is a deterministic function of the arguments.
Cloud generate_cloud(const Region& region, int n, double d, double eps,
                     std::uint64_t seed, const LameParams& params,
                     double gate_c = 0.2);

} // namespace mesovoid
