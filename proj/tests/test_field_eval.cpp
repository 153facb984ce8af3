#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mesovoid/fdiff.hpp"
#include "mesovoid/field_eval.hpp"
#include "mesovoid/solver.hpp"
#include "mesovoid/sphere_dipole.hpp"
#include "mesovoid/validation.hpp"

#include <cmath>

using namespace mesovoid;

namespace {
const LameParams kP(1.3, 0.8);

struct Setup {
  Cloud cloud;
  BackgroundField bg;
  Eigen::VectorXd c;
};

Setup solved_setup() {
  Cloud cloud{kP, 0.5, Region{Vec3::Zero(), 4.0}, {}};
  cloud.voids.push_back({Vec3(-0.8, 0.1, 0.0), 0.09});
  cloud.voids.push_back({Vec3(0.9, -0.2, 0.3), 0.07});
  BackgroundField bg =
      make_background({ForcePair{Vec3(7.0, 0.0, 0.0), Vec3(0.0, 0.0, 1.0), 0.6, 2.0},
                       ForcePair{Vec3(-6.5, 2.0, 1.0), Vec3(1.0, 1.0, 0.0), 0.4, -1.5}});
  InteractionSystem sys = assemble_system(cloud, bg);
  Eigen::VectorXd c = solve_coefficients(sys, SolveMethod::Dense);
  return {cloud, bg, c};
}
} // namespace

TEST_CASE("zero coefficients reduce both representations to the background") {
  Setup s = solved_setup();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(s.c.size());
  for (const Vec3& x : {Vec3(2.0, 1.0, -0.5), Vec3(0.0, 3.0, 0.0), Vec3(-15.0, 4.0, 2.0)}) {
    const Vec3 bg = background_eval(s.bg, x, kP);
    CHECK(far_field(x, s.cloud, s.bg, zero).u == bg);
    CHECK(uniform_field(x, s.cloud, s.bg, zero).u == bg);
  }
}

TEST_CASE("uniform representation superposes the cavity response fields") {
  Setup s = solved_setup();
  const Vec3 x(1.8, -1.1, 0.7);
  Vec3 manual = background_eval(s.bg, x, kP);
  for (std::size_t k = 0; k < s.cloud.size(); ++k)
    manual += dipole_field(x, s.cloud.voids[k], kP) * s.c.segment<6>(6 * k);
  const Vec3 lib = uniform_field(x, s.cloud, s.bg, s.c).u;
  CHECK((lib - manual).norm() < 1e-14 * manual.norm());
  CHECK(detail::uniform_field_raw(x, s.cloud, s.bg, s.c) == lib);
}

TEST_CASE("far and uniform representations agree to fourth order at distance") {
  Setup s = solved_setup();
  const Vec3 dir = Vec3(0.3, 0.8, -0.5).normalized();
  std::vector<double> radii, gaps;
  for (int i = 0; i < 6; ++i) {
    const double r = 10.0 * std::pow(10.0, i / 5.0);
    const Vec3 x = r * dir;
    radii.push_back(r);
    gaps.push_back((far_field(x, s.cloud, s.bg, s.c).u -
                    uniform_field(x, s.cloud, s.bg, s.c).u)
                       .norm());
  }
  CHECK(fit_log_slope(radii, gaps).slope <= -3.5);
}

TEST_CASE("total field decays like the background") {
  Setup s = solved_setup();
  const Vec3 dir = Vec3(-0.2, 0.5, 0.9).normalized();
  std::vector<double> radii, mags;
  for (int i = 0; i < 6; ++i) {
    const double r = 50.0 * std::pow(10.0, i / 5.0);
    radii.push_back(r);
    mags.push_back(uniform_field(r * dir, s.cloud, s.bg, s.c).u.norm());
  }
  CHECK(fit_log_slope(radii, mags).slope == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("uniform representation satisfies the homogeneous equations") {
  Setup s = solved_setup();
  auto field = [&](const Vec3& x) {
    return detail::uniform_field_raw(x, s.cloud, s.bg, s.c);
  };
  for (const Vec3& x : {Vec3(0.0, 1.5, 0.0), Vec3(-1.6, -0.9, 0.8)}) {
    const Vec3 res = lame_residual(field, x, kP, 1e-4);
    CHECK(res.cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("sample classification") {
  Setup s = solved_setup();

  FieldSample inside = uniform_field(s.cloud.voids[1].center + Vec3(0.0, 0.0, 0.03),
                                     s.cloud, s.bg, s.c);
  CHECK(inside.status == SampleStatus::InsideVoid);
  CHECK(inside.void_index == 1);
  CHECK(inside.u.norm() == 0.0);

  // Points on the boundary belong to the cavity.
  const Vec3 on = s.cloud.voids[0].center + Vec3(s.cloud.voids[0].radius, 0.0, 0.0);
  CHECK(uniform_field(on, s.cloud, s.bg, s.c).status == SampleStatus::InsideVoid);

  const Vec3 near_src = s.bg.pairs[0].location + Vec3(0.0, 0.0, 0.3) +
                        Vec3(1e-5, 0.0, 0.0);
  FieldSample ns = uniform_field(near_src, s.cloud, s.bg, s.c);
  CHECK(ns.status == SampleStatus::NearSource);
  CHECK(ns.void_index == -1);
  CHECK(ns.u.norm() == 0.0);

  FieldSample ext = uniform_field(Vec3(2.5, 2.5, 0.0), s.cloud, s.bg, s.c);
  CHECK(ext.status == SampleStatus::Exterior);
  CHECK(ext.u.norm() > 0.0);
}

TEST_CASE("far-zone flag") {
  Setup s = solved_setup();
  CHECK(far_field(Vec3(6.0, 0.0, 0.0), s.cloud, s.bg, s.c).far_zone);
  CHECK_FALSE(far_field(Vec3(4.5, 0.0, 0.0), s.cloud, s.bg, s.c).far_zone);
}

TEST_CASE("coefficient vector length is checked") {
  Setup s = solved_setup();
  const Eigen::VectorXd short_c = Eigen::VectorXd::Zero(6);
  CHECK_THROWS_AS(uniform_field(Vec3(2, 2, 2), s.cloud, s.bg, short_c), InputError);
  CHECK_THROWS_AS(far_field(Vec3(2, 2, 2), s.cloud, s.bg, short_c), InputError);
}

TEST_CASE("lattice grids run x fastest") {
  EvaluationGrid g = EvaluationGrid::lattice(Vec3(1.0, 2.0, 3.0), Vec3(0.5, 1.0, 2.0),
                                             {2, 3, 2});
  REQUIRE(g.size() == 12);
  CHECK(g.point(0) == Vec3(1.0, 2.0, 3.0));
  CHECK(g.point(1) == Vec3(1.5, 2.0, 3.0));
  CHECK(g.point(2) == Vec3(1.0, 3.0, 3.0));
  CHECK(g.point(6) == Vec3(1.0, 2.0, 5.0));
  CHECK(g.point(11) == Vec3(1.5, 4.0, 5.0));
}

TEST_CASE("grid evaluation preserves order and matches point evaluation") {
  Setup s = solved_setup();
  std::vector<Vec3> pts{Vec3(2.0, 0.0, 0.0), s.cloud.voids[0].center,
                        Vec3(-3.0, 1.0, 2.0), Vec3(0.0, 2.2, -1.4)};
  EvaluationGrid g = EvaluationGrid::from_points(pts);
  std::vector<FieldSample> out = evaluate_grid(g, FieldKind::Uniform, s.cloud, s.bg, s.c);
  REQUIRE(out.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(out[i].point == pts[i]);
    FieldSample direct = uniform_field(pts[i], s.cloud, s.bg, s.c);
    CHECK(out[i].u == direct.u);
    CHECK(out[i].status == direct.status);
    CHECK(out[i].void_index == direct.void_index);
  }
  CHECK(out[1].status == SampleStatus::InsideVoid);

  std::vector<FieldSample> far = evaluate_grid(g, FieldKind::Far, s.cloud, s.bg, s.c);
  CHECK(far[0].u == far_field(pts[0], s.cloud, s.bg, s.c).u);
}

TEST_CASE("parallel evaluation is bitwise identical to serial") {
  Setup s = solved_setup();
  EvaluationGrid g = EvaluationGrid::lattice(Vec3(-3.0, -3.0, -3.0), Vec3(0.9, 1.1, 1.3),
                                             {7, 6, 5});
  std::vector<FieldSample> serial = evaluate_grid(g, FieldKind::Uniform, s.cloud, s.bg,
                                                  s.c, 1);
  std::vector<FieldSample> parallel = evaluate_grid(g, FieldKind::Uniform, s.cloud, s.bg,
                                                    s.c, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].u == parallel[i].u);
    CHECK(serial[i].status == parallel[i].status);
  }
}

TEST_CASE("field kind parsing") {
  CHECK(parse_field_kind("far") == FieldKind::Far);
  CHECK(parse_field_kind("uniform") == FieldKind::Uniform);
  CHECK_THROWS_AS(parse_field_kind("exact"), InputError);
}

TEST_CASE("grid constructor validation") {
  CHECK_THROWS_AS(EvaluationGrid::lattice(Vec3::Zero(), Vec3::Ones(), {0, 2, 2}),
                  InputError);
  CHECK_THROWS_AS(EvaluationGrid::lattice(Vec3::Zero(), Vec3::Ones(), {2, -1, 2}),
                  InputError);
}
