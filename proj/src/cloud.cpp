#include "mesovoid/cloud.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace mesovoid {

namespace {

// 53-bit uniform in [0, 1); independent of the standard library's
// distribution implementations so generated clouds are reproducible
// everywhere.
double next_unit(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

Vec3 sample_in_ball(std::mt19937_64& rng, const Vec3& center, double radius) {
  const double ct = 2.0 * next_unit(rng) - 1.0;
  const double phi = 2.0 * M_PI * next_unit(rng);
  const double r = radius * std::cbrt(next_unit(rng));
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  return center + r * Vec3(st * std::cos(phi), st * std::sin(phi), ct);
}

} // namespace

CloudReport validate_cloud(const Cloud& c, double gate_c) {
  if (!(c.d > 0.0)) throw InputError("validate_cloud: separation scale d must be positive");
  if (!(c.region.radius > 0.0))
    throw InputError("validate_cloud: region radius must be positive");
  if (!(gate_c > 0.0)) throw InputError("validate_cloud: gate constant must be positive");

  CloudReport rep;
  rep.min_separation = std::numeric_limits<double>::infinity();
  rep.min_clearance = std::numeric_limits<double>::infinity();
  rep.max_radius_ratio = 0.0;

  const double slack = 1.0 - 1e-12;
  for (std::size_t i = 0; i < c.voids.size(); ++i) {
    const Void& v = c.voids[i];
    if (!(v.radius > 0.0)) throw InputError("validate_cloud: cavity radius must be positive");
    rep.max_radius_ratio = std::max(rep.max_radius_ratio, v.radius / c.d);
    const double clearance =
        c.region.radius - (v.center - c.region.center).norm() - v.radius;
    rep.min_clearance = std::min(rep.min_clearance, clearance);
    for (std::size_t j = i + 1; j < c.voids.size(); ++j)
      rep.min_separation =
          std::min(rep.min_separation, (v.center - c.voids[j].center).norm());
  }

  rep.separation_ok = rep.min_separation >= 2.0 * c.d * slack;
  rep.clearance_ok = rep.min_clearance >= 2.0 * c.d * slack;
  rep.gate_ok = rep.max_radius_ratio < gate_c;
  return rep;
}

Cloud generate_cloud(const Region& region, int n, double d, double eps,
                     std::uint64_t seed, const LameParams& params, double gate_c) {
  if (n < 0) throw InputError("generate_cloud: negative cavity count");
  if (!(d > 0.0)) throw InputError("generate_cloud: d must be positive");
  if (!(eps > 0.0)) throw InputError("generate_cloud: eps must be positive");
  if (!(region.radius > 0.0)) throw InputError("generate_cloud: region radius must be positive");
  if (!(eps < gate_c * d))
    throw GateError("generate_cloud: diluteness gate eps < c*d violated");

  // Centres live in a shrunken ball so every cavity keeps a 2d clearance
  // from the region boundary.
  const double sample_radius = region.radius - 2.0 * d - eps;
  if (!(sample_radius > 0.0))
    throw GateError("generate_cloud: region too small for the boundary clearance");
  const double cell = 8.0 * d * d * d; // (2d)^3 excluded volume per cavity
  const double volume = 4.0 / 3.0 * M_PI * std::pow(sample_radius, 3);
  if (double(n) * cell > 0.3 * volume)
    throw GateError("generate_cloud: capacity exceeded, packing infeasible");

  Cloud cloud{params, d, region, {}};
  cloud.voids.reserve(std::size_t(n));
  std::mt19937_64 rng(seed);
  const std::uint64_t max_attempts = std::uint64_t(10000) * std::uint64_t(std::max(n, 1));
  std::uint64_t attempts = 0;
  while (cloud.voids.size() < std::size_t(n)) {
    if (++attempts > max_attempts)
      throw GateError("generate_cloud: placement failed within the attempt budget");
    const Vec3 candidate = sample_in_ball(rng, region.center, sample_radius);
    bool ok = true;
    for (const Void& v : cloud.voids)
      if ((candidate - v.center).norm() < 2.0 * d) {
        ok = false;
        break;
      }
    if (ok) cloud.voids.push_back(Void{candidate, eps});
  }
  return cloud;
}

} // namespace mesovoid
