#include "mesovoid/cli.hpp"

#include "mesovoid/io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace mesovoid {

namespace {

struct GenerateOptions {
  int n = 0;
  double d = 0.0, eps = 0.0, region_radius = 0.0;
  double lambda = 1.0, mu = 1.0, gate_c = 0.2;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveOptions {
  std::string cloud, background, method = "dense", out;
  double gate_c = 0.2;
};

struct EvalOptions {
  std::string cloud, coeffs, background, grid, kind = "uniform", out, format = "csv";
  double gate_c = 0.2;
  int threads = 1;
};

struct ValidateOptions {
  std::string cloud, background, report;
  double gate_c = 0.2;
};

struct StudyOptions {
  std::string cloud, background, report;
  std::vector<double> eps_list;
  double gate_c = 0.2;
};

void run_generate(const GenerateOptions& opt) {
  const Cloud cloud =
      generate_cloud(Region{Vec3::Zero(), opt.region_radius}, opt.n, opt.d, opt.eps,
                     opt.seed, LameParams(opt.lambda, opt.mu), opt.gate_c);
  save_cloud(cloud, opt.out);
  std::cout << "wrote " << cloud.size() << " cavities to " << opt.out << "\n";
}

void run_solve(const SolveOptions& opt) {
  const Cloud cloud = load_cloud(opt.cloud, opt.gate_c);
  const BackgroundField bg = load_background(opt.background);
  InteractionSystem sys = assemble_system(cloud, bg, opt.gate_c);
  const SolveMethod method = parse_method(opt.method);
  solve_coefficients(sys, method);
  const SystemDiagnostics diag = system_diagnostics(sys);
  save_solution(sys.C, diag, opt.method, opt.out);
  std::cout << "solved " << cloud.size() << " cavities, ||PM||_inf = "
            << format_double(diag.pm_inf_norm) << ", residual = "
            << format_double(diag.residual_inf.value_or(0.0)) << "\n";
}

void run_eval(const EvalOptions& opt) {
  const Cloud cloud = load_cloud(opt.cloud, opt.gate_c);
  const BackgroundField bg = load_background(opt.background);
  const Eigen::VectorXd c = load_coefficients(opt.coeffs, cloud.size());
  const EvaluationGrid grid = load_grid(opt.grid);
  const FieldKind kind = parse_field_kind(opt.kind);
  const std::vector<FieldSample> samples =
      evaluate_grid(grid, kind, cloud, bg, c, opt.threads);
  if (opt.format == "csv")
    write_field_csv(samples, opt.out);
  else if (opt.format == "vtk")
    write_field_vtk(samples, opt.out);
  else
    throw InputError("unknown output format: " + opt.format);
  std::cout << "evaluated " << samples.size() << " points to " << opt.out << "\n";
}

void run_validate(const ValidateOptions& opt) {
  const Cloud cloud = load_cloud(opt.cloud, opt.gate_c);
  const BackgroundField bg = load_background(opt.background);
  const std::vector<CheckReport> checks = run_check_suite(cloud, bg, opt.gate_c);
  bool all = true;
  for (const CheckReport& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
              << "  measured=" << format_double(c.measured)
              << "  threshold=" << format_double(c.threshold) << "\n";
    all = all && c.pass;
  }
  if (!opt.report.empty()) write_check_report(checks, opt.report);
  if (!all) throw NumericalError("validation checks failed");
}

void run_study(const StudyOptions& opt) {
  const Cloud cloud = load_cloud(opt.cloud, opt.gate_c);
  const BackgroundField bg = load_background(opt.background);
  const StudyResult result =
      residual_convergence_study(cloud, bg, opt.eps_list, opt.gate_c);
  for (const StudyPoint& pt : result.points)
    std::cout << "eps=" << format_double(pt.eps)
              << "  residual=" << format_double(pt.residual) << "\n";
  for (const auto& [eps, reason] : result.skipped)
    std::cout << "skipped eps=" << format_double(eps) << "  (" << reason << ")\n";
  if (result.fit)
    std::cout << "slope=" << format_double(result.fit->slope) << "\n";
  else
    std::cout << "slope unavailable (fewer than four usable radii)\n";
  if (!opt.report.empty()) write_study_report(result, opt.report);
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"dipole approximation of elastic fields around dilute cavity clouds"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* cg = app.add_subcommand("generate", "sample a cavity cloud");
  cg->add_option("--n", gen.n, "number of cavities")->required();
  cg->add_option("--d", gen.d, "separation scale (centres keep 2d apart)")->required();
  cg->add_option("--eps", gen.eps, "cavity radius")->required();
  cg->add_option("--region-radius", gen.region_radius, "radius of the cloud region")
      ->required();
  cg->add_option("--seed", gen.seed, "RNG seed")->required();
  cg->add_option("--out", gen.out, "output cloud JSON")->required();
  cg->add_option("--lambda", gen.lambda, "first elastic modulus");
  cg->add_option("--mu", gen.mu, "shear modulus");
  cg->add_option("--gate-c", gen.gate_c, "diluteness gate constant");
  cg->callback([&] { run_generate(gen); });

  SolveOptions sol;
  CLI::App* cs = app.add_subcommand("solve", "solve the interaction system");
  cs->add_option("--cloud", sol.cloud, "cloud JSON")->required();
  cs->add_option("--background", sol.background, "background JSON")->required();
  cs->add_option("--method", sol.method, "dense | neumann");
  cs->add_option("--out", sol.out, "output coefficients JSON")->required();
  cs->add_option("--gate-c", sol.gate_c, "diluteness gate constant");
  cs->callback([&] { run_solve(sol); });

  EvalOptions ev;
  CLI::App* ce = app.add_subcommand("eval", "evaluate the displacement field");
  ce->add_option("--cloud", ev.cloud, "cloud JSON")->required();
  ce->add_option("--coeffs", ev.coeffs, "coefficients JSON from solve")->required();
  ce->add_option("--background", ev.background, "background JSON")->required();
  ce->add_option("--grid", ev.grid, "grid JSON (lattice or point list)")->required();
  ce->add_option("--kind", ev.kind, "far | uniform");
  ce->add_option("--out", ev.out, "output file")->required();
  ce->add_option("--format", ev.format, "csv | vtk");
  ce->add_option("--threads", ev.threads, "worker threads");
  ce->add_option("--gate-c", ev.gate_c, "diluteness gate constant");
  ce->callback([&] { run_eval(ev); });

  ValidateOptions val;
  CLI::App* cv = app.add_subcommand("validate", "run the numerical check suite");
  cv->add_option("--cloud", val.cloud, "cloud JSON")->required();
  cv->add_option("--background", val.background, "background JSON")->required();
  cv->add_option("--report", val.report, "output report JSON");
  cv->add_option("--gate-c", val.gate_c, "diluteness gate constant");
  cv->callback([&] { run_validate(val); });

  StudyOptions st;
  CLI::App* cst = app.add_subcommand("study", "boundary-residual convergence study");
  cst->add_option("--cloud", st.cloud, "cloud JSON")->required();
  cst->add_option("--background", st.background, "background JSON")->required();
  cst->add_option("--eps-list", st.eps_list, "cavity radii to sweep")
      ->required()
      ->delimiter(',');
  cst->add_option("--report", st.report, "output report JSON");
  cst->add_option("--gate-c", st.gate_c, "diluteness gate constant");
  cst->callback([&] { run_study(st); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const GateError& e) {
    std::cerr << "gate error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

} // namespace mesovoid
