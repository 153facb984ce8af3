#include "mesovoid/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>

namespace mesovoid {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

void write_json(const json& j, const std::filesystem::path& path) {
  write_text(path, j.dump(2) + "\n");
}

Vec3 parse_vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw InputError(std::string(what) + ": expected an array of three numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[std::size_t(i)].is_number())
      throw InputError(std::string(what) + ": expected an array of three numbers");
    v[i] = j[std::size_t(i)].get<double>();
  }
  return v;
}

json dump_vec3(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

double parse_number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

int status_code(const FieldSample& s) {
  switch (s.status) {
    case SampleStatus::Exterior: return 0;
    case SampleStatus::InsideVoid: return s.void_index + 1;
    case SampleStatus::NearSource: return -1;
  }
  return -1;
}

} // namespace

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Cloud load_cloud(const std::filesystem::path& path, double gate_c) {
  const json j = load_json(path);
  try {
    const json& lame = j.at("lame");
    const LameParams p(parse_number(lame.at("lambda"), "lame.lambda"),
                       parse_number(lame.at("mu"), "lame.mu"));
    Cloud cloud{p, parse_number(j.at("d"), "d"), Region{}, {}};
    cloud.region.center = parse_vec3(j.at("region").at("center"), "region.center");
    cloud.region.radius = parse_number(j.at("region").at("radius"), "region.radius");
    for (const json& jv : j.at("voids")) {
      Void v;
      v.center = parse_vec3(jv.at("center"), "void.center");
      v.radius = parse_number(jv.at("radius"), "void.radius");
      cloud.voids.push_back(v);
    }
    const CloudReport rep = validate_cloud(cloud, gate_c);
    if (!rep.gate_ok)
      throw GateError(path.string() + ": diluteness gate max radius < c*d violated");
    if (!rep.separation_ok)
      throw GateError(path.string() + ": centre separation below 2d");
    if (!rep.clearance_ok)
      throw GateError(path.string() + ": cavity clearance to the region boundary below 2d");
    return cloud;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_cloud(const Cloud& cloud, const std::filesystem::path& path) {
  json j;
  j["lame"] = {{"lambda", cloud.params.lambda}, {"mu", cloud.params.mu}};
  j["d"] = cloud.d;
  j["region"] = {{"center", dump_vec3(cloud.region.center)},
                 {"radius", cloud.region.radius}};
  json voids = json::array();
  for (const Void& v : cloud.voids)
    voids.push_back({{"center", dump_vec3(v.center)}, {"radius", v.radius}});
  j["voids"] = std::move(voids);
  write_json(j, path);
}

BackgroundField load_background(const std::filesystem::path& path) {
  const json j = load_json(path);
  std::vector<ForcePair> pairs;
  try {
    for (const json& jp : j.at("pairs")) {
      ForcePair pr;
      pr.location = parse_vec3(jp.at("location"), "pair.location");
      pr.axis = parse_vec3(jp.at("axis"), "pair.axis");
      pr.gap = parse_number(jp.at("gap"), "pair.gap");
      pr.magnitude = parse_number(jp.at("magnitude"), "pair.magnitude");
      pairs.push_back(pr);
    }
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return make_background(std::move(pairs));
}

void save_background(const BackgroundField& bg, const std::filesystem::path& path) {
  json pairs = json::array();
  for (const ForcePair& pr : bg.pairs)
    pairs.push_back({{"location", dump_vec3(pr.location)},
                     {"axis", dump_vec3(pr.axis)},
                     {"gap", pr.gap},
                     {"magnitude", pr.magnitude}});
  write_json(json{{"pairs", std::move(pairs)}}, path);
}

void save_solution(const Eigen::VectorXd& c, const SystemDiagnostics& diag,
                   const std::string& method, const std::filesystem::path& path) {
  json coeffs = json::array();
  for (Eigen::Index k = 0; 6 * k < c.size(); ++k) {
    json block = json::array();
    for (int i = 0; i < 6; ++i) block.push_back(c[6 * k + i]);
    coeffs.push_back(std::move(block));
  }
  json jd{{"pm_inf_norm", diag.pm_inf_norm},
          {"neg_dipole_eig_min", diag.neg_m_eig_min},
          {"neg_dipole_eig_max", diag.neg_m_eig_max},
          {"gate_ok", diag.gate_ok},
          {"method", method}};
  if (diag.residual_inf) jd["residual_inf"] = *diag.residual_inf;
  if (diag.energy_ratio) jd["energy_ratio"] = *diag.energy_ratio;
  if (diag.stability_ratio) jd["stability_ratio"] = *diag.stability_ratio;
  write_json(json{{"coefficients", std::move(coeffs)}, {"diagnostics", std::move(jd)}},
             path);
}

Eigen::VectorXd load_coefficients(const std::filesystem::path& path,
                                  std::size_t expected_voids) {
  const json j = load_json(path);
  try {
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || coeffs.size() != expected_voids)
      throw InputError(path.string() + ": coefficient count does not match the cloud");
    Eigen::VectorXd c(6 * Eigen::Index(expected_voids));
    for (std::size_t k = 0; k < expected_voids; ++k) {
      const json& block = coeffs[k];
      if (!block.is_array() || block.size() != 6)
        throw InputError(path.string() + ": each cavity needs six coefficients");
      for (int i = 0; i < 6; ++i)
        c[Eigen::Index(6 * k) + i] = parse_number(block[std::size_t(i)], "coefficient");
    }
    return c;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

EvaluationGrid load_grid(const std::filesystem::path& path) {
  const json j = load_json(path);
  try {
    if (j.contains("points")) {
      std::vector<Vec3> pts;
      for (const json& jp : j.at("points")) pts.push_back(parse_vec3(jp, "grid point"));
      return EvaluationGrid::from_points(std::move(pts));
    }
    const Vec3 origin = parse_vec3(j.at("origin"), "grid.origin");
    const Vec3 spacing = parse_vec3(j.at("spacing"), "grid.spacing");
    const json& jc = j.at("counts");
    if (!jc.is_array() || jc.size() != 3)
      throw InputError("grid.counts: expected three integers");
    std::array<int, 3> counts;
    for (int i = 0; i < 3; ++i) counts[std::size_t(i)] = jc[std::size_t(i)].get<int>();
    return EvaluationGrid::lattice(origin, spacing, counts);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_field_csv(const std::vector<FieldSample>& samples,
                     const std::filesystem::path& path) {
  std::string text = "x,y,z,ux,uy,uz,status\n";
  for (const FieldSample& s : samples) {
    text += format_double(s.point[0]) + ',' + format_double(s.point[1]) + ',' +
            format_double(s.point[2]) + ',';
    if (s.status == SampleStatus::Exterior)
      text += format_double(s.u[0]) + ',' + format_double(s.u[1]) + ',' +
              format_double(s.u[2]);
    else
      text += ",,";
    text += ',' + std::to_string(status_code(s)) + '\n';
  }
  write_text(path, text);
}

void write_field_vtk(const std::vector<FieldSample>& samples,
                     const std::filesystem::path& path) {
  std::string text = "# vtk DataFile Version 3.0\n";
  text += "displacement field\nASCII\nDATASET POLYDATA\n";
  text += "POINTS " + std::to_string(samples.size()) + " double\n";
  for (const FieldSample& s : samples)
    text += format_double(s.point[0]) + ' ' + format_double(s.point[1]) + ' ' +
            format_double(s.point[2]) + '\n';
  text += "POINT_DATA " + std::to_string(samples.size()) + '\n';
  text += "VECTORS displacement double\n";
  for (const FieldSample& s : samples) {
    const Vec3 u = s.status == SampleStatus::Exterior ? s.u : Vec3::Zero();
    text += format_double(u[0]) + ' ' + format_double(u[1]) + ' ' +
            format_double(u[2]) + '\n';
  }
  write_text(path, text);
}

void write_check_report(const std::vector<CheckReport>& checks,
                        const std::filesystem::path& path) {
  json list = json::array();
  bool all = true;
  for (const CheckReport& c : checks) {
    list.push_back({{"name", c.name},
                    {"measured", c.measured},
                    {"threshold", c.threshold},
                    {"pass", c.pass},
                    {"note", c.note}});
    all = all && c.pass;
  }
  write_json(json{{"checks", std::move(list)}, {"pass", all}}, path);
}

void write_study_report(const StudyResult& result, const std::filesystem::path& path) {
  json points = json::array();
  for (const StudyPoint& pt : result.points)
    points.push_back({{"eps", pt.eps}, {"residual", pt.residual}});
  json skipped = json::array();
  for (const auto& [eps, reason] : result.skipped)
    skipped.push_back({{"eps", eps}, {"reason", reason}});
  json j{{"points", std::move(points)}, {"skipped", std::move(skipped)}};
  if (result.fit) {
    j["slope"] = result.fit->slope;
    j["intercept"] = result.fit->intercept;
    j["rms_residual"] = result.fit->rms_residual;
  } else {
    j["slope"] = nullptr;
  }
  write_json(j, path);
}

} // namespace mesovoid
