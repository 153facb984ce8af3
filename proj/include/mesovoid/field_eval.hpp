#pragma once

#include "mesovoid/background.hpp"
#include "mesovoid/cloud.hpp"

#include <array>
#include <vector>

// Point evaluation of the approximate displacement field of the perforated
// medium.  Two representations share the solved coefficients C:
//   far      - background plus dipole-kernel terms; cheap, valid away from
//              the cloud (clearance of one length unit).
//   uniform  - background plus the full cavity response fields; valid up to
//              the cavity boundaries.

namespace mesovoid {

enum class SampleStatus {
  Exterior,   // field value is meaningful
  InsideVoid, // point inside or on a cavity; value masked
  NearSource  // point within 1e-3 * gap of a point force; value masked
};

struct FieldSample {
  Vec3 point = Vec3::Zero();
  Vec3 u = Vec3::Zero();
  SampleStatus status = SampleStatus::Exterior;
  int void_index = -1; // cavity index for InsideVoid, else -1
};

struct FarFieldValue {
  Vec3 u;
  bool far_zone; // true when the far-field clearance holds at x
};

// Coefficient vector layout: 6 entries per cavity, cavity order.
FarFieldValue far_field(const Vec3& x, const Cloud& cloud, const BackgroundField& bg,
                        const Eigen::VectorXd& c);

FieldSample uniform_field(const Vec3& x, const Cloud& cloud, const BackgroundField& bg,
                          const Eigen::VectorXd& c);

namespace detail {
// Unmasked uniform-representation displacement; finite everywhere except
// cavity centres and source points.  Lets quadrature and finite differences
// reach the cavity boundaries.
Vec3 uniform_field_raw(const Vec3& x, const Cloud& cloud, const BackgroundField& bg,
                       const Eigen::VectorXd& c);
} // namespace detail

// Either an explicit point list or an axis-aligned lattice traversed with x
// fastest, then y, then z.
class EvaluationGrid {
public:
  static EvaluationGrid from_points(std::vector<Vec3> points);
  static EvaluationGrid lattice(const Vec3& origin, const Vec3& spacing,
                                const std::array<int, 3>& counts);

  std::size_t size() const;
  Vec3 point(std::size_t i) const;

private:
  EvaluationGrid() = default;
  std::vector<Vec3> points_;
  bool is_lattice_ = false;
  Vec3 origin_ = Vec3::Zero();
  Vec3 spacing_ = Vec3::Zero();
  std::array<int, 3> counts_ = {0, 0, 0};
};

enum class FieldKind { Far, Uniform };
FieldKind parse_field_kind(const std::string& name); // "far" | "uniform"

// Evaluates every grid point; sample order equals grid order regardless of
// the number of worker threads.
std::vector<FieldSample> evaluate_grid(const EvaluationGrid& grid, FieldKind kind,
                                       const Cloud& cloud, const BackgroundField& bg,
                                       const Eigen::VectorXd& c, int threads = 1);

} // namespace mesovoid
