#pragma once

#include "mesovoid/background.hpp"
#include "mesovoid/cloud.hpp"
#include "mesovoid/fdiff.hpp"

#include <optional>
#include <string>
#include <vector>

// Numerical cross-checks.  Everything here probes the library through
// point evaluations, quadrature and finite differences only, so the checks
// stay independent of the closed forms they certify.

namespace mesovoid {

struct CheckReport {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

// Least-squares line through (log x, log y).  Requires at least four
// strictly positive samples.
struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};
SlopeFit fit_log_slope(const std::vector<double>& x, const std::vector<double>& y);

// Applies the first-order operator family to the two companion matrix
// families symbolically (exact arithmetic in the ring of dyadic rationals
// extended by sqrt2) and checks that the contractions give exactly the
// identity and exactly zero.  measured is the largest absolute deviation of
// any entry; pass requires it to be exactly 0.
CheckReport xi_identity_check();

// Deviation of the two sphere mean-value identities (surface and volume)
// for an equilibrium field around `center` with radius R.
struct MeanValueReport {
  double surface_deviation;
  double volume_deviation;
};
MeanValueReport mean_value_check(const VectorField& field, const Vec3& center,
                                 double radius, const LameParams& p,
                                 int n_polar = 16, int n_azimuth = 32,
                                 int n_radial = 12);

// Interior gradient bound probe: |grad w(center)| * R / sup_{ball} |w|.
// Scale-invariant and bounded for equilibrium fields.
double local_regularity_probe(const VectorField& field, const Vec3& center,
                              double radius);

// Re-solves the cloud with every cavity radius set to eps and measures the
// sup of the boundary traction of the uniform-representation field over all
// cavity surfaces (finite-difference gradients, surface quadrature nodes).
struct StudyPoint {
  double eps;
  double residual;
};
struct StudyResult {
  std::vector<StudyPoint> points;
  std::vector<std::pair<double, std::string>> skipped; // (eps, reason)
  std::optional<SlopeFit> fit; // present when at least four points survive
};
StudyResult residual_convergence_study(const Cloud& cloud, const BackgroundField& bg,
                                       const std::vector<double>& eps_list,
                                       double gate_c = 0.2);

// The full battery run by the validate command: kernel and dipole checks
// with fixed seeds plus system-level checks on the given cloud/background.
std::vector<CheckReport> run_check_suite(const Cloud& cloud, const BackgroundField& bg,
                                         double gate_c = 0.2);

} // namespace mesovoid
