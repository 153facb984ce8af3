#include "mesovoid/validation.hpp"

#include "mesovoid/elastic_core.hpp"
#include "mesovoid/field_eval.hpp"
#include "mesovoid/kernels.hpp"
#include "mesovoid/quadrature.hpp"
#include "mesovoid/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace mesovoid {

SlopeFit fit_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InputError("fit_log_slope: size mismatch");
  if (x.size() < 4) throw InputError("fit_log_slope: need at least four samples");
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InputError("fit_log_slope: samples must be strictly positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw InputError("fit_log_slope: abscissae must be distinct");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / double(n));
  return fit;
}

// ---------------------------------------------------------------------------
// Exact first-order identity check.
//
// Numbers of the form q + r*sqrt2 with dyadic-rational q, r are closed under
// addition and multiplication, and both components stay exactly
// representable in doubles for these tiny tables, so the whole computation
// is exact.

namespace {

struct Rt2 {
  double q = 0.0; // rational part
  double r = 0.0; // coefficient of sqrt(2)
};
Rt2 operator+(Rt2 u, Rt2 v) { return {u.q + v.q, u.r + v.r}; }
Rt2 operator*(Rt2 u, Rt2 v) { return {u.q * v.q + 2.0 * u.r * v.r, u.q * v.r + u.r * v.q}; }

struct AffineEntry {
  Rt2 constant{};
  std::array<Rt2, 3> lin{};
};
using MatrixFamily = std::array<std::array<AffineEntry, 6>, 3>;

constexpr double kHalf = 0.5;

// Entries of the 3x6 strain interpolation matrix: column alpha of the
// matrix evaluated at x is V_alpha * x.
MatrixFamily strain_family() {
  MatrixFamily f{};
  const Rt2 one{1.0, 0.0}, s{0.0, kHalf}; // s = sqrt2 / 2
  f[0][0].lin[0] = one;
  f[1][1].lin[1] = one;
  f[2][2].lin[2] = one;
  f[0][3].lin[1] = s;
  f[1][3].lin[0] = s;
  f[0][4].lin[2] = s;
  f[2][4].lin[0] = s;
  f[1][5].lin[2] = s;
  f[2][5].lin[1] = s;
  return f;
}

// Companion family spanning the rigid displacements.
MatrixFamily rigid_family() {
  MatrixFamily f{};
  const Rt2 one{1.0, 0.0}, s{0.0, kHalf}, ms{0.0, -kHalf};
  f[0][0].constant = one;
  f[1][1].constant = one;
  f[2][2].constant = one;
  f[0][3].lin[1] = s;
  f[1][3].lin[0] = ms;
  f[0][4].lin[2] = s;
  f[2][4].lin[0] = ms;
  f[1][5].lin[2] = s;
  f[2][5].lin[1] = ms;
  return f;
}

// (operator family)^T applied to a polynomial family: entry (a, b) is
// sum_i sum_m lin-coefficient_m of op[i][a] times lin-coefficient_m of
// arg[i][b] (differentiation picks out the linear coefficients).
std::array<std::array<Rt2, 6>, 6> apply_operator(const MatrixFamily& op,
                                                 const MatrixFamily& arg) {
  std::array<std::array<Rt2, 6>, 6> out{};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Rt2 acc{};
      for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 3; ++m) acc = acc + op[i][a].lin[m] * arg[i][b].lin[m];
      out[a][b] = acc;
    }
  return out;
}

} // namespace

CheckReport xi_identity_check() {
  const MatrixFamily strain = strain_family();
  const MatrixFamily rigid = rigid_family();
  const auto to_identity = apply_operator(strain, strain);
  const auto to_zero = apply_operator(strain, rigid);

  bool exact = true;
  double measured = 0.0;
  const double sqrt2 = std::sqrt(2.0);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const Rt2 d1{to_identity[a][b].q - (a == b ? 1.0 : 0.0), to_identity[a][b].r};
      const Rt2 d2 = to_zero[a][b];
      for (const Rt2& d : {d1, d2}) {
        exact = exact && d.q == 0.0 && d.r == 0.0;
        measured = std::max(measured, std::abs(d.q + d.r * sqrt2));
      }
    }
  return {"xi-identity", measured, 0.0, exact,
          exact ? "exact" : "symbolic contraction deviates"};
}

// ---------------------------------------------------------------------------

MeanValueReport mean_value_check(const VectorField& field, const Vec3& center,
                                 double radius, const LameParams& p, int n_polar,
                                 int n_azimuth, int n_radial) {
  if (!(radius > 0.0)) throw InputError("mean_value_check: radius must be positive");
  const double lam = p.lambda, mu = p.mu;
  const double denom = lam + 4.0 * mu;
  const Vec3 w0 = field(center);

  const SphereRule surf = sphere_surface_rule(center, radius, n_polar, n_azimuth);
  Vec3 quad_moment = Vec3::Zero(); // integral of (x - c)(x - c)^T w
  Vec3 plain = Vec3::Zero();       // integral of w
  for (std::size_t q = 0; q < surf.size(); ++q) {
    const Vec3 w = field(surf.points[q]);
    const Vec3 rel = surf.points[q] - center;
    quad_moment += surf.weights[q] * rel * rel.dot(w);
    plain += surf.weights[q] * w;
  }
  const double r2 = radius * radius;
  const double r4 = r2 * r2;
  const Vec3 surface_rhs = (15.0 * (lam + mu) / (8.0 * M_PI * r4 * denom)) * quad_moment -
                           (3.0 * (lam - mu) / (8.0 * M_PI * r2 * denom)) * plain;

  const BallRule ball = ball_volume_rule(center, radius, n_radial, n_polar, n_azimuth);
  Vec3 vol_moment = Vec3::Zero();
  Vec3 vol_scaled = Vec3::Zero(); // integral of |x - c|^2 w
  for (std::size_t q = 0; q < ball.size(); ++q) {
    const Vec3 w = field(ball.points[q]);
    const Vec3 rel = ball.points[q] - center;
    vol_moment += ball.weights[q] * rel * rel.dot(w);
    vol_scaled += ball.weights[q] * rel.squaredNorm() * w;
  }
  const double r5 = r4 * radius;
  const Vec3 volume_rhs = (75.0 * (lam + mu) / (8.0 * M_PI * r5 * denom)) * vol_moment -
                          (15.0 * (lam - mu) / (8.0 * M_PI * r5 * denom)) * vol_scaled;

  return {(w0 - surface_rhs).cwiseAbs().maxCoeff(),
          (w0 - volume_rhs).cwiseAbs().maxCoeff()};
}

double local_regularity_probe(const VectorField& field, const Vec3& center,
                              double radius) {
  if (!(radius > 0.0)) throw InputError("local_regularity_probe: radius must be positive");
  const Mat3 grad = fd_gradient(field, center, 1e-5 * radius);
  const double grad_max = grad.cwiseAbs().maxCoeff();
  double sup = field(center).cwiseAbs().maxCoeff();
  const BallRule ball = ball_volume_rule(center, radius, 8, 12, 24);
  for (const Vec3& x : ball.points) sup = std::max(sup, field(x).cwiseAbs().maxCoeff());
  const SphereRule surf = sphere_surface_rule(center, radius, 12, 24);
  for (const Vec3& x : surf.points) sup = std::max(sup, field(x).cwiseAbs().maxCoeff());
  if (sup == 0.0) return 0.0;
  return grad_max * radius / sup;
}

StudyResult residual_convergence_study(const Cloud& cloud, const BackgroundField& bg,
                                       const std::vector<double>& eps_list,
                                       double gate_c) {
  StudyResult out;
  for (double eps : eps_list) {
    if (!(eps > 0.0)) {
      out.skipped.emplace_back(eps, "radius must be positive");
      continue;
    }
    if (!(eps < gate_c * cloud.d)) {
      out.skipped.emplace_back(eps, "diluteness gate eps < c*d");
      continue;
    }
    Cloud scaled = cloud;
    for (Void& v : scaled.voids) v.radius = eps;

    InteractionSystem sys;
    try {
      sys = assemble_system(scaled, bg, gate_c);
    } catch (const GateError& e) {
      out.skipped.emplace_back(eps, e.what());
      continue;
    }
    solve_coefficients(sys, SolveMethod::Dense);

    // Sup of the boundary traction of the approximation over all cavities;
    // the exact field has zero traction there, so this is the defect.
    auto field = [&](const Vec3& x) {
      return detail::uniform_field_raw(x, scaled, bg, sys.C);
    };
    double sup = 0.0;
    for (const Void& v : scaled.voids) {
      const SphereRule rule = sphere_surface_rule(v.center, v.radius, 16, 32);
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const Vec3 t = fd_traction(field, rule.points[q], -rule.normals[q],
                                   scaled.params, 1e-4 * eps);
        sup = std::max(sup, t.norm());
      }
    }
    out.points.push_back({eps, sup});
  }

  if (out.points.size() >= 4) {
    std::vector<double> xs, ys;
    for (const StudyPoint& pt : out.points) {
      xs.push_back(pt.eps);
      ys.push_back(pt.residual);
    }
    out.fit = fit_log_slope(xs, ys);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Check suite.

namespace {

double next_unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

Vec3 random_point(std::mt19937_64& rng, double half_width) {
  return Vec3(half_width * (2.0 * next_unit(rng) - 1.0),
              half_width * (2.0 * next_unit(rng) - 1.0),
              half_width * (2.0 * next_unit(rng) - 1.0));
}

CheckReport kernel_dipole_check(const LameParams& p) {
  std::mt19937_64 rng(0x100);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 x, y;
    do {
      x = random_point(rng, 2.0);
      y = random_point(rng, 2.0);
    } while ((x - y).norm() < 0.5);
    const double h = 1e-3 * (x - y).norm();
    const Mat36 d = gamma_dipole_kernel(x, y, p);
    Mat36 fd;
    for (int b = 0; b < 6; ++b) {
      // Column b responds to the source-position derivative contraction;
      // differentiate gamma in its second argument.
      const auto& basis = strain_basis();
      Vec3 col = Vec3::Zero();
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
          const double w = basis[std::size_t(b)](i, k);
          if (w == 0.0) continue;
          auto entry = [&](const Vec3& src) -> Vec3 { return gamma(x, src, p).col(i); };
          Vec3 ek = Vec3::Zero();
          ek[k] = 1.0;
          const Vec3 coarse = (entry(y + h * ek) - entry(y - h * ek)) / (2.0 * h);
          const Vec3 fine = (entry(y + 0.5 * h * ek) - entry(y - 0.5 * h * ek)) / h;
          col += w * (4.0 * fine - coarse) / 3.0;
        }
      fd.col(b) = col;
    }
    worst = std::max(worst, (fd - d).cwiseAbs().maxCoeff() / d.cwiseAbs().maxCoeff());
  }
  return {"kernel-dipole-fd", worst, 1e-7, worst < 1e-7,
          "Richardson differences of the point kernel, 50 configurations"};
}

CheckReport kernel_hessian_check(const LameParams& p) {
  std::mt19937_64 rng(0x200);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Vec3 x, y;
    do {
      x = random_point(rng, 2.0);
      y = random_point(rng, 2.0);
    } while ((x - y).norm() < 0.5);
    const double h = 1e-3 * (x - y).norm();
    const Mat6 k = gamma_hessian_kernel(x, y, p);
    Mat6 fd;
    for (int b = 0; b < 6; ++b) {
      auto column = [&](const Vec3& pt) -> Vec3 {
        return gamma_dipole_kernel(pt, y, p).col(b);
      };
      fd.col(b) = strain_vector(richardson_gradient(column, x, h));
    }
    worst = std::max(worst, (fd - k).cwiseAbs().maxCoeff() / k.cwiseAbs().maxCoeff());
  }
  return {"kernel-hessian-fd", worst, 1e-7, worst < 1e-7,
          "strain contraction of Richardson-differenced dipole columns"};
}

CheckReport kernel_residual_check(const LameParams& p) {
  std::mt19937_64 rng(0x300);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Vec3 x, y;
    do {
      x = random_point(rng, 2.0);
      y = random_point(rng, 2.0);
    } while ((x - y).norm() < 0.5);
    const double r = (x - y).norm();
    for (int j = 0; j < 3; ++j) {
      auto column = [&](const Vec3& pt) -> Vec3 { return gamma(pt, y, p).col(j); };
      const Vec3 res = lame_residual(column, x, p, 1e-4 * r);
      worst = std::max(worst, res.cwiseAbs().maxCoeff() * r * r * r);
    }
  }
  return {"kernel-lame-residual", worst, 1e-4, worst < 1e-4,
          "FD equilibrium residual of kernel columns, scaled by |x-y|^3"};
}

CheckReport dipole_scaling_check(const LameParams& p) {
  const std::vector<double> radii{0.5, 1.0, 2.0, 4.0};
  std::vector<double> low, high;
  for (double a : radii) {
    Eigen::SelfAdjointEigenSolver<Mat6> es(-dipole_matrix(a, p).m);
    low.push_back(es.eigenvalues().minCoeff());
    high.push_back(es.eigenvalues().maxCoeff());
  }
  const double dev = std::max(std::abs(fit_log_slope(radii, low).slope - 3.0),
                              std::abs(fit_log_slope(radii, high).slope - 3.0));
  return {"dipole-matrix-scaling", dev, 1e-9, dev < 1e-9,
          "log-log slope of extreme eigenvalues vs radius, offset from 3"};
}

CheckReport dipole_traction_check(const LameParams& p) {
  const Void v{Vec3(0.2, -0.1, 0.3), 1.0};
  const SphereRule rule = sphere_surface_rule(v.center, v.radius, 16, 32);
  const Mat6 a = stiffness_matrix(p);
  double worst = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const Vec3 n = -rule.normals[q];
    const Mat36 target = big_xi(n) * a;
    Mat36 got;
    for (int col = 0; col < 6; ++col) {
      auto column = [&](const Vec3& pt) -> Vec3 {
        return detail::dipole_field_unguarded(pt, v, p).col(col);
      };
      got.col(col) = fd_traction(column, rule.points[q], n, p, 1e-4 * v.radius);
    }
    worst = std::max(worst, (got - target).cwiseAbs().maxCoeff() /
                                target.cwiseAbs().maxCoeff());
  }
  return {"dipole-traction-identity", worst, 1e-6, worst < 1e-6,
          "boundary traction of the cavity field vs the uniform-strain load"};
}

CheckReport dipole_orthogonality_check(const LameParams& p) {
  const OrthogonalityReport rep = check_orthogonality(Void{Vec3::Zero(), 1.0}, p);
  const double worst = std::max(rep.max_force, rep.max_moment);
  return {"dipole-orthogonality", worst, 1e-8, worst < 1e-8,
          "integrated boundary force and moment of the cavity field"};
}

CheckReport dipole_far_slope_check(const LameParams& p) {
  const Void v{Vec3::Zero(), 1.0};
  const Mat6 m = dipole_matrix(v.radius, p).m;
  const Vec3 dirs[3] = {Vec3(0.3, -0.7, 0.64).normalized(),
                        Vec3(0.8, 0.5, 0.33).normalized(),
                        Vec3(-0.48, 0.6, 0.64).normalized()};
  std::vector<double> radii, rem;
  for (int i = 0; i < 8; ++i) {
    const double r = 10.0 * std::pow(10.0, i / 7.0);
    double worst = 0.0;
    for (const Vec3& dir : dirs) {
      const Vec3 x = v.center + r * dir;
      const Mat36 tail = dipole_field(x, v, p) - gamma_dipole_kernel(x, v.center, p) * m;
      worst = std::max(worst, tail.cwiseAbs().maxCoeff());
    }
    radii.push_back(r);
    rem.push_back(worst);
  }
  const double slope = fit_log_slope(radii, rem).slope;
  return {"dipole-far-slope", slope, -3.0, slope <= -3.0,
          "decay exponent of the remainder beyond the dipole-kernel term"};
}

CheckReport mean_value_suite_check(const Cloud& cloud, const BackgroundField& bg) {
  const LameParams& p = cloud.params;
  double worst = 0.0;
  const Vec3 c0(0.1, -0.2, 0.15);
  const double radius = 0.8;

  const Vec3 constant(1.0, 2.0, -1.0);
  auto const_field = [&](const Vec3&) { return constant; };
  auto rigid = [&](const Vec3& x) { return rigid_motion_matrix(x - c0) * Vec3(0.4, -1.0, 0.7); };
  const Vec3 source(3.0, 1.5, -2.5);
  auto kernel_col = [&](const Vec3& x) -> Vec3 { return gamma(x, source, p).col(1); };

  for (const VectorField& f : {VectorField(const_field), VectorField(rigid),
                               VectorField(kernel_col)}) {
    const MeanValueReport rep = mean_value_check(f, c0, radius, p);
    worst = std::max({worst, rep.surface_deviation, rep.volume_deviation});
  }

  // Background field around the region centre (sources clear the region).
  auto bg_field = [&](const Vec3& x) { return background_eval(bg, x, p); };
  const MeanValueReport rep =
      mean_value_check(bg_field, cloud.region.center, 0.5 * cloud.region.radius, p);
  worst = std::max({worst, rep.surface_deviation, rep.volume_deviation});

  return {"mean-value-identities", worst, 1e-7, worst < 1e-7,
          "surface and volume forms on constant, rigid, kernel and background fields"};
}

CheckReport regularity_check(const Cloud& cloud, const BackgroundField& bg) {
  const LameParams& p = cloud.params;
  const Vec3 source(4.0, 0.5, -1.0);
  auto kernel_col = [&](const Vec3& x) -> Vec3 { return gamma(x, source, p).col(0); };
  auto bg_field = [&](const Vec3& x) { return background_eval(bg, x, p); };
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double r = 0.15 * std::pow(10.0, i / 4.0); // one decade sweep
    worst = std::max(worst, local_regularity_probe(kernel_col, Vec3::Zero(), r));
    worst = std::max(worst, local_regularity_probe(
                                bg_field, cloud.region.center,
                                r / 1.5 * 0.5 * cloud.region.radius));
  }
  return {"local-regularity", worst, 10.0, worst < 10.0,
          "interior gradient bound ratio across a decade of radii"};
}

CheckReport background_strain_check(const Cloud& cloud, const BackgroundField& bg) {
  const LameParams& p = cloud.params;
  std::mt19937_64 rng(0x400);
  double worst = 0.0;
  auto field = [&](const Vec3& x) { return background_eval(bg, x, p); };
  for (int trial = 0; trial < 10; ++trial) {
    const Vec3 x = cloud.region.center + random_point(rng, 0.5 * cloud.region.radius);
    const Vec6 analytic = background_strain(bg, x, p);
    const Vec6 fd = strain_vector(richardson_gradient(field, x, 1e-3));
    const double scale = std::max(analytic.cwiseAbs().maxCoeff(), 1e-300);
    worst = std::max(worst, (fd - analytic).cwiseAbs().maxCoeff() / scale);
  }
  return {"background-strain-consistency", worst, 1e-8, worst < 1e-8,
          "closed-form strain vs Richardson differences of the displacement"};
}

} // namespace

std::vector<CheckReport> run_check_suite(const Cloud& cloud, const BackgroundField& bg,
                                         double gate_c) {
  std::vector<CheckReport> reports;
  const LameParams& p = cloud.params;

  reports.push_back(xi_identity_check());
  reports.push_back(kernel_dipole_check(p));
  reports.push_back(kernel_hessian_check(p));
  reports.push_back(kernel_residual_check(p));
  reports.push_back(dipole_scaling_check(p));
  reports.push_back(dipole_traction_check(p));
  reports.push_back(dipole_orthogonality_check(p));
  reports.push_back(dipole_far_slope_check(p));
  reports.push_back(mean_value_suite_check(cloud, bg));
  reports.push_back(regularity_check(cloud, bg));
  reports.push_back(background_strain_check(cloud, bg));

  const CloudReport crep = validate_cloud(cloud, gate_c);
  reports.push_back({"cloud-gates", crep.max_radius_ratio, gate_c, crep.pass(),
                     "separation, clearance and diluteness gates"});

  InteractionSystem sys = assemble_system(cloud, bg, gate_c);
  const Eigen::VectorXd dense = solve_coefficients(sys, SolveMethod::Dense);
  SystemDiagnostics diag = system_diagnostics(sys);
  reports.push_back({"solver-residual",
                     diag.residual_inf.value_or(0.0),
                     1e-10 * std::max(sys.V.lpNorm<Eigen::Infinity>(), 1e-300),
                     diag.residual_inf.value_or(0.0) <=
                         1e-10 * std::max(sys.V.lpNorm<Eigen::Infinity>(), 1e-300),
                     "infinity norm of (I + PM)C + V after the dense solve"});

  if (diag.gate_ok && sys.num_voids() > 0) {
    InteractionSystem sys2 = sys;
    const Eigen::VectorXd neumann = solve_coefficients(sys2, SolveMethod::Neumann);
    const double dev = (dense - neumann).lpNorm<Eigen::Infinity>() /
                       std::max(dense.lpNorm<Eigen::Infinity>(), 1e-300);
    reports.push_back({"solver-method-agreement", dev, 1e-9, dev < 1e-9,
                       "dense vs Neumann coefficients"});
  } else {
    reports.push_back({"solver-method-agreement", 0.0, 1e-9, true,
                       "skipped: contraction gate ||PM|| < 1 not satisfied"});
  }
  reports.push_back({"solver-stability-ratio", diag.stability_ratio.value_or(0.0), 0.0,
                     true, "informational: |C|^2 / |V|^2"});

  // Equilibrium residual of the composite field at exterior probe points.
  {
    std::mt19937_64 rng(0x500);
    auto field = [&](const Vec3& x) {
      return detail::uniform_field_raw(x, cloud, bg, sys.C);
    };
    std::vector<PointForce> sources = bg.point_forces();
    double num = 0.0, den = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
      Vec3 dir = random_point(rng, 1.0);
      while (dir.norm() < 0.1) dir = random_point(rng, 1.0);
      dir.normalize();
      const Vec3 x = cloud.region.center + (cloud.region.radius + 0.5) * dir;
      double dist = std::numeric_limits<double>::infinity();
      for (const Void& v : cloud.voids) dist = std::min(dist, (x - v.center).norm());
      for (const PointForce& s : sources) dist = std::min(dist, (x - s.position).norm());
      const Vec3 res = lame_residual(field, x, p, 1e-4 * dist);
      num = std::max(num, res.cwiseAbs().maxCoeff() * dist * dist * dist);
      den = std::max(den, field(x).cwiseAbs().maxCoeff() * dist);
    }
    const double measured = den > 0.0 ? num / den : 0.0;
    reports.push_back({"field-lame-residual", measured, 1e-4, measured < 1e-4,
                       "scaled FD equilibrium residual of the composite field"});
  }

  return reports;
}

} // namespace mesovoid
