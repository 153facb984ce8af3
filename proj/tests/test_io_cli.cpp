#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mesovoid/cli.hpp"
#include "mesovoid/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace mesovoid;
namespace fs = std::filesystem;

namespace {

const LameParams kP(1.3, 0.8);

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"mesovoid"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream sink; // keep command chatter out of the test log
  std::streambuf* saved = std::cout.rdbuf(sink.rdbuf());
  const int code = cli_main(int(argv.size()), argv.data());
  std::cout.rdbuf(saved);
  return code;
}

Cloud sample_cloud() {
  Cloud c{kP, 0.5, Region{Vec3::Zero(), 4.0}, {}};
  c.voids.push_back({Vec3(-0.8, 0.1, 1.0 / 3.0), 0.05});
  c.voids.push_back({Vec3(0.9, -0.2, 0.3), 0.07});
  return c;
}

BackgroundField sample_background() {
  return make_background({ForcePair{Vec3(6.5, 0.0, 0.0), Vec3(0.0, 0.0, 1.0), 0.6, 2.0},
                          ForcePair{Vec3(-6.0, 2.0, 1.0), Vec3(1.0, 1.0, 0.0), 0.4, -1.5}});
}

} // namespace

TEST_CASE("doubles are written in shortest exact form") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-42.5) == "-42.5");
  for (double v : {1.0 / 3.0, 3.141592653589793, 2.5e-7, 1e300, 1e-300, 0.0, -17.25}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("cloud files round-trip bitwise") {
  const fs::path dir = fresh_dir("mesovoid_io_cloud");
  const Cloud c = sample_cloud();
  save_cloud(c, dir / "a.json");
  const Cloud loaded = load_cloud(dir / "a.json");
  CHECK(loaded.params.lambda == c.params.lambda);
  CHECK(loaded.params.mu == c.params.mu);
  CHECK(loaded.d == c.d);
  CHECK(loaded.region.center == c.region.center);
  CHECK(loaded.region.radius == c.region.radius);
  REQUIRE(loaded.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(loaded.voids[i].center == c.voids[i].center);
    CHECK(loaded.voids[i].radius == c.voids[i].radius);
  }
  save_cloud(loaded, dir / "b.json");
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
}

TEST_CASE("cloud loading rejects bad files") {
  const fs::path dir = fresh_dir("mesovoid_io_cloud_bad");
  CHECK_THROWS_AS(load_cloud(dir / "missing.json"), InputError);

  spit(dir / "garbage.json", "not json {");
  CHECK_THROWS_AS(load_cloud(dir / "garbage.json"), InputError);

  spit(dir / "incomplete.json", R"({"lame": {"lambda": 1.0}})");
  CHECK_THROWS_AS(load_cloud(dir / "incomplete.json"), InputError);

  spit(dir / "badvec.json",
       R"({"lame":{"lambda":1,"mu":1},"d":0.5,)"
       R"("region":{"center":[0,0],"radius":4},"voids":[]})");
  CHECK_THROWS_AS(load_cloud(dir / "badvec.json"), InputError);

  // Structurally valid but gate-violating clouds are gate errors, not input
  // errors.
  Cloud fat = sample_cloud();
  fat.voids[0].radius = 0.2; // ratio 0.4 >= 0.2
  save_cloud(fat, dir / "fat.json");
  CHECK_THROWS_AS(load_cloud(dir / "fat.json"), GateError);
  CHECK_NOTHROW(load_cloud(dir / "fat.json", 0.5));

  Cloud close = sample_cloud();
  close.voids[1].center = close.voids[0].center + Vec3(0.3, 0.0, 0.0);
  save_cloud(close, dir / "close.json");
  CHECK_THROWS_AS(load_cloud(dir / "close.json"), GateError);
}

TEST_CASE("background files round-trip bitwise") {
  const fs::path dir = fresh_dir("mesovoid_io_bg");
  const BackgroundField bg = sample_background();
  save_background(bg, dir / "a.json");
  const BackgroundField loaded = load_background(dir / "a.json");
  REQUIRE(loaded.pairs.size() == bg.pairs.size());
  for (std::size_t i = 0; i < bg.pairs.size(); ++i) {
    CHECK(loaded.pairs[i].location == bg.pairs[i].location);
    CHECK(loaded.pairs[i].axis == bg.pairs[i].axis);
    CHECK(loaded.pairs[i].gap == bg.pairs[i].gap);
    CHECK(loaded.pairs[i].magnitude == bg.pairs[i].magnitude);
  }
  save_background(loaded, dir / "b.json");
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));

  spit(dir / "degenerate.json",
       R"({"pairs":[{"location":[0,0,0],"axis":[0,0,0],"gap":0.5,"magnitude":1}]})");
  CHECK_THROWS_AS(load_background(dir / "degenerate.json"), InputError);
}

TEST_CASE("solution files carry the coefficients and diagnostics") {
  const fs::path dir = fresh_dir("mesovoid_io_solution");
  const Cloud c = sample_cloud();
  const BackgroundField bg = sample_background();
  InteractionSystem sys = assemble_system(c, bg);
  solve_coefficients(sys, SolveMethod::Dense);
  const SystemDiagnostics diag = system_diagnostics(sys);
  save_solution(sys.C, diag, "dense", dir / "sol.json");

  const Eigen::VectorXd back = load_coefficients(dir / "sol.json", c.size());
  CHECK(back == sys.C);
  CHECK_THROWS_AS(load_coefficients(dir / "sol.json", c.size() + 1), InputError);

  const nlohmann::json j = nlohmann::json::parse(slurp(dir / "sol.json"));
  CHECK(j.at("diagnostics").at("method") == "dense");
  CHECK(j.at("diagnostics").at("gate_ok").get<bool>());
  CHECK(j.at("diagnostics").at("pm_inf_norm").is_number());
  CHECK(j.at("diagnostics").contains("residual_inf"));
  CHECK(j.at("diagnostics").at("neg_dipole_eig_min").get<double>() > 0.0);
}

TEST_CASE("grid files") {
  const fs::path dir = fresh_dir("mesovoid_io_grid");
  spit(dir / "points.json", R"({"points": [[1, 2, 3], [0.5, -0.25, 0]]})");
  EvaluationGrid g = load_grid(dir / "points.json");
  REQUIRE(g.size() == 2);
  CHECK(g.point(0) == Vec3(1, 2, 3));
  CHECK(g.point(1) == Vec3(0.5, -0.25, 0));

  spit(dir / "lattice.json",
       R"({"origin": [0, 0, 0], "spacing": [1, 1, 1], "counts": [2, 2, 2]})");
  EvaluationGrid lat = load_grid(dir / "lattice.json");
  REQUIRE(lat.size() == 8);
  CHECK(lat.point(1) == Vec3(1, 0, 0));

  spit(dir / "badcounts.json",
       R"({"origin": [0, 0, 0], "spacing": [1, 1, 1], "counts": [0, 2, 2]})");
  CHECK_THROWS_AS(load_grid(dir / "badcounts.json"), InputError);
  spit(dir / "badpoint.json", R"({"points": [[1, 2]]})");
  CHECK_THROWS_AS(load_grid(dir / "badpoint.json"), InputError);
  spit(dir / "neither.json", R"({"foo": 1})");
  CHECK_THROWS_AS(load_grid(dir / "neither.json"), InputError);
}

TEST_CASE("field CSV format") {
  const fs::path dir = fresh_dir("mesovoid_io_csv");
  std::vector<FieldSample> samples(3);
  samples[0] = {Vec3(1, 2, 3), Vec3(0.5, -0.25, 3.0), SampleStatus::Exterior, -1};
  samples[1] = {Vec3(4, 5, 6), Vec3::Zero(), SampleStatus::InsideVoid, 0};
  samples[2] = {Vec3(7, 8, 9), Vec3::Zero(), SampleStatus::NearSource, -1};
  write_field_csv(samples, dir / "f.csv");
  CHECK(slurp(dir / "f.csv") == "x,y,z,ux,uy,uz,status\n"
                                "1,2,3,0.5,-0.25,3,0\n"
                                "4,5,6,,,,1\n"
                                "7,8,9,,,,-1\n");
}

TEST_CASE("field VTK format") {
  const fs::path dir = fresh_dir("mesovoid_io_vtk");
  std::vector<FieldSample> samples(2);
  samples[0] = {Vec3(1, 2, 3), Vec3(0.5, -0.25, 3.0), SampleStatus::Exterior, -1};
  samples[1] = {Vec3(4, 5, 6), Vec3(9, 9, 9), SampleStatus::InsideVoid, 1};
  write_field_vtk(samples, dir / "f.vtk");
  CHECK(slurp(dir / "f.vtk") == "# vtk DataFile Version 3.0\n"
                                "displacement field\n"
                                "ASCII\n"
                                "DATASET POLYDATA\n"
                                "POINTS 2 double\n"
                                "1 2 3\n"
                                "4 5 6\n"
                                "POINT_DATA 2\n"
                                "VECTORS displacement double\n"
                                "0.5 -0.25 3\n"
                                "0 0 0\n");
}

TEST_CASE("command-line pipeline") {
  const fs::path dir = fresh_dir("mesovoid_cli_pipeline");
  const std::string cloud = (dir / "cloud.json").string();
  const std::string bg = (dir / "bg.json").string();
  const std::string sol = (dir / "sol.json").string();
  const std::string grid = (dir / "grid.json").string();

  CHECK(run_cli({"generate", "--n", "6", "--d", "0.4", "--eps", "0.05",
                 "--region-radius", "4", "--seed", "42", "--lambda", "1", "--mu", "1",
                 "--out", cloud}) == 0);
  save_background(sample_background(), bg);
  CHECK(run_cli({"solve", "--cloud", cloud, "--background", bg, "--out", sol}) == 0);
  spit(grid, R"({"origin": [-3, -3, -3], "spacing": [1.5, 1.5, 1.5], "counts": [5, 5, 5]})");

  CHECK(run_cli({"eval", "--cloud", cloud, "--coeffs", sol, "--background", bg,
                 "--grid", grid, "--out", (dir / "f.csv").string()}) == 0);
  const std::string csv = slurp(dir / "f.csv");
  CHECK(csv.rfind("x,y,z,ux,uy,uz,status\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 126); // header + 125 lattice points

  CHECK(run_cli({"eval", "--cloud", cloud, "--coeffs", sol, "--background", bg,
                 "--grid", grid, "--kind", "far", "--format", "vtk", "--out",
                 (dir / "f.vtk").string()}) == 0);
  CHECK(slurp(dir / "f.vtk").rfind("# vtk DataFile Version 3.0\n", 0) == 0);

  CHECK(run_cli({"solve", "--cloud", cloud, "--background", bg, "--method", "neumann",
                 "--out", (dir / "sol_n.json").string()}) == 0);
}

TEST_CASE("command-line outputs are reproducible") {
  const fs::path dir = fresh_dir("mesovoid_cli_repro");
  save_background(sample_background(), dir / "bg.json");
  spit(dir / "grid.json",
       R"({"origin": [-3, -3, -3], "spacing": [2, 2, 3], "counts": [4, 4, 3]})");

  auto pipeline = [&](const std::string& tag, const std::string& threads) {
    const std::string cloud = (dir / ("cloud_" + tag + ".json")).string();
    const std::string sol = (dir / ("sol_" + tag + ".json")).string();
    const std::string csv = (dir / ("f_" + tag + ".csv")).string();
    REQUIRE(run_cli({"generate", "--n", "5", "--d", "0.4", "--eps", "0.05",
                     "--region-radius", "4", "--seed", "7", "--out", cloud}) == 0);
    REQUIRE(run_cli({"solve", "--cloud", cloud, "--background",
                     (dir / "bg.json").string(), "--out", sol}) == 0);
    REQUIRE(run_cli({"eval", "--cloud", cloud, "--coeffs", sol, "--background",
                     (dir / "bg.json").string(), "--grid", (dir / "grid.json").string(),
                     "--threads", threads, "--out", csv}) == 0);
  };
  pipeline("a", "1");
  pipeline("b", "3");
  CHECK(slurp(dir / "cloud_a.json") == slurp(dir / "cloud_b.json"));
  CHECK(slurp(dir / "sol_a.json") == slurp(dir / "sol_b.json"));
  CHECK(slurp(dir / "f_a.csv") == slurp(dir / "f_b.csv"));
}

TEST_CASE("command-line exit codes") {
  const fs::path dir = fresh_dir("mesovoid_cli_codes");
  const std::string cloud = (dir / "cloud.json").string();
  const std::string bg = (dir / "bg.json").string();
  save_cloud(sample_cloud(), cloud);
  save_background(sample_background(), bg);

  // Diluteness gate: eps == gate_c * d.
  CHECK(run_cli({"generate", "--n", "3", "--d", "0.5", "--eps", "0.1",
                 "--region-radius", "4", "--seed", "1", "--out",
                 (dir / "x.json").string()}) == 3);
  // Missing input file.
  CHECK(run_cli({"solve", "--cloud", (dir / "missing.json").string(), "--background",
                 bg, "--out", (dir / "s.json").string()}) == 2);
  // Unknown solver method.
  CHECK(run_cli({"solve", "--cloud", cloud, "--background", bg, "--method", "qr",
                 "--out", (dir / "s.json").string()}) == 2);
  // Unknown output format.
  REQUIRE(run_cli({"solve", "--cloud", cloud, "--background", bg, "--out",
                   (dir / "s.json").string()}) == 0);
  spit(dir / "grid.json", R"({"points": [[2, 2, 2]]})");
  CHECK(run_cli({"eval", "--cloud", cloud, "--coeffs", (dir / "s.json").string(),
                 "--background", bg, "--grid", (dir / "grid.json").string(),
                 "--format", "hdf5", "--out", (dir / "f").string()}) == 2);
  // Argument parsing problems.
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"generate", "--n", "3"}) == 2);
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("study command writes a convergence report") {
  const fs::path dir = fresh_dir("mesovoid_cli_study");
  const std::string cloud = (dir / "cloud.json").string();
  const std::string bg = (dir / "bg.json").string();
  save_cloud(sample_cloud(), cloud);
  save_background(sample_background(), bg);

  CHECK(run_cli({"study", "--cloud", cloud, "--background", bg, "--eps-list",
                 "0.005,0.01,0.02,0.04,0.2", "--report",
                 (dir / "report.json").string()}) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(dir / "report.json"));
  REQUIRE(j.at("points").size() == 4);
  REQUIRE(j.at("skipped").size() == 1);
  CHECK(j.at("skipped")[0].at("eps").get<double>() == 0.2);
  CHECK(j.at("slope").is_number());
  CHECK(j.at("slope").get<double>() >= 0.9);
}
