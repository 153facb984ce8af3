#include "mesovoid/field_eval.hpp"

#include "mesovoid/kernels.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace mesovoid {

namespace {

void require_coefficients(const Cloud& cloud, const Eigen::VectorXd& c) {
  if (c.size() != Eigen::Index(6 * cloud.size()))
    throw InputError("field evaluation: coefficient vector size does not match the cloud");
}

// Status of a point under the masking rules; void_index set for InsideVoid.
FieldSample classify(const Vec3& x, const Cloud& cloud, const BackgroundField& bg) {
  FieldSample s;
  s.point = x;
  for (const ForcePair& pr : bg.pairs) {
    const Vec3 off = 0.5 * pr.gap * pr.axis;
    const double guard = 1e-3 * pr.gap;
    if ((x - (pr.location + off)).norm() < guard ||
        (x - (pr.location - off)).norm() < guard) {
      s.status = SampleStatus::NearSource;
      return s;
    }
  }
  for (std::size_t k = 0; k < cloud.voids.size(); ++k)
    if ((x - cloud.voids[k].center).norm() <= cloud.voids[k].radius) {
      s.status = SampleStatus::InsideVoid;
      s.void_index = int(k);
      return s;
    }
  return s;
}

} // namespace

FarFieldValue far_field(const Vec3& x, const Cloud& cloud, const BackgroundField& bg,
                        const Eigen::VectorXd& c) {
  require_coefficients(cloud, c);
  Vec3 u = background_eval(bg, x, cloud.params);
  for (std::size_t k = 0; k < cloud.voids.size(); ++k)
    u += gamma_dipole_kernel(x, cloud.voids[k].center, cloud.params) *
         (dipole_matrix(cloud.voids[k].radius, cloud.params).m *
          c.segment<6>(Eigen::Index(6 * k)));
  const double clearance = (x - cloud.region.center).norm() - cloud.region.radius;
  return {u, clearance > 1.0};
}

namespace detail {

Vec3 uniform_field_raw(const Vec3& x, const Cloud& cloud, const BackgroundField& bg,
                       const Eigen::VectorXd& c) {
  Vec3 u = background_eval(bg, x, cloud.params);
  for (std::size_t k = 0; k < cloud.voids.size(); ++k)
    u += dipole_field_unguarded(x, cloud.voids[k], cloud.params) *
         c.segment<6>(Eigen::Index(6 * k));
  return u;
}

} // namespace detail

FieldSample uniform_field(const Vec3& x, const Cloud& cloud, const BackgroundField& bg,
                          const Eigen::VectorXd& c) {
  require_coefficients(cloud, c);
  FieldSample s = classify(x, cloud, bg);
  if (s.status == SampleStatus::Exterior)
    s.u = detail::uniform_field_raw(x, cloud, bg, c);
  return s;
}

EvaluationGrid EvaluationGrid::from_points(std::vector<Vec3> points) {
  EvaluationGrid g;
  g.points_ = std::move(points);
  return g;
}

EvaluationGrid EvaluationGrid::lattice(const Vec3& origin, const Vec3& spacing,
                                       const std::array<int, 3>& counts) {
  for (int n : counts)
    if (n < 1) throw InputError("EvaluationGrid: lattice counts must be positive");
  EvaluationGrid g;
  g.is_lattice_ = true;
  g.origin_ = origin;
  g.spacing_ = spacing;
  g.counts_ = counts;
  return g;
}

std::size_t EvaluationGrid::size() const {
  if (!is_lattice_) return points_.size();
  return std::size_t(counts_[0]) * counts_[1] * counts_[2];
}

Vec3 EvaluationGrid::point(std::size_t i) const {
  if (!is_lattice_) return points_.at(i);
  const std::size_t nx = counts_[0], ny = counts_[1];
  const std::size_t ix = i % nx, iy = (i / nx) % ny, iz = i / (nx * ny);
  return origin_ + Vec3(ix * spacing_[0], iy * spacing_[1], iz * spacing_[2]);
}

FieldKind parse_field_kind(const std::string& name) {
  if (name == "far") return FieldKind::Far;
  if (name == "uniform") return FieldKind::Uniform;
  throw InputError("unknown field kind: " + name);
}

std::vector<FieldSample> evaluate_grid(const EvaluationGrid& grid, FieldKind kind,
                                       const Cloud& cloud, const BackgroundField& bg,
                                       const Eigen::VectorXd& c, int threads) {
  require_coefficients(cloud, c);
  const std::size_t n = grid.size();
  std::vector<FieldSample> samples(n);

  auto evaluate_one = [&](std::size_t i) {
    const Vec3 x = grid.point(i);
    if (kind == FieldKind::Uniform) {
      samples[i] = uniform_field(x, cloud, bg, c);
    } else {
      FieldSample s = classify(x, cloud, bg);
      if (s.status == SampleStatus::Exterior) s.u = far_field(x, cloud, bg, c).u;
      samples[i] = s;
    }
  };

  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) evaluate_one(i);
  } else {
    // Each worker owns the samples it writes, so the result is identical to
    // the serial pass.
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) evaluate_one(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, int(n));
    pool.reserve(std::size_t(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  return samples;
}

} // namespace mesovoid
