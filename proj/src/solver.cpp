#include "mesovoid/solver.hpp"

#include "mesovoid/kernels.hpp"

#include <Eigen/Eigenvalues>

namespace mesovoid {

Eigen::MatrixXd InteractionSystem::interaction_product() const {
  const int n = num_voids();
  Eigen::MatrixXd pm(6 * n, 6 * n);
  for (int k = 0; k < n; ++k)
    pm.middleCols<6>(6 * k) = P.middleCols<6>(6 * k) * M[std::size_t(k)].m;
  return pm;
}

InteractionSystem assemble_system(const Cloud& cloud, const BackgroundField& bg,
                                  double gate_c) {
  const CloudReport rep = validate_cloud(cloud, gate_c);
  if (!rep.pass()) {
    if (!rep.gate_ok) throw GateError("assemble_system: diluteness gate violated");
    if (!rep.separation_ok) throw GateError("assemble_system: centre separation below 2d");
    throw GateError("assemble_system: cavity too close to the region boundary");
  }
  require_sources_clear(bg, cloud.region);

  const int n = int(cloud.size());
  InteractionSystem sys;
  sys.P = Eigen::MatrixXd::Zero(6 * n, 6 * n);
  sys.M.reserve(std::size_t(n));
  sys.V.resize(6 * n);
  for (int j = 0; j < n; ++j) {
    const Void& vj = cloud.voids[std::size_t(j)];
    sys.M.push_back(dipole_matrix(vj.radius, cloud.params));
    sys.V.segment<6>(6 * j) = background_strain(bg, vj.center, cloud.params);
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      sys.P.block<6, 6>(6 * j, 6 * k) =
          gamma_hessian_kernel(vj.center, cloud.voids[std::size_t(k)].center, cloud.params);
    }
  }
  return sys;
}

Eigen::VectorXd solve_coefficients(InteractionSystem& sys, SolveMethod method) {
  const int dim = 6 * sys.num_voids();
  if (sys.V.size() != dim || sys.P.rows() != dim || sys.P.cols() != dim)
    throw InputError("solve_coefficients: inconsistent system dimensions");
  if (dim == 0) {
    sys.C.resize(0);
    return sys.C;
  }

  const Eigen::MatrixXd pm = sys.interaction_product();
  const double vnorm = sys.V.lpNorm<Eigen::Infinity>();
  Eigen::VectorXd c;

  if (method == SolveMethod::Dense) {
    Eigen::MatrixXd lhs = pm;
    lhs.diagonal().array() += 1.0;
    c = Eigen::PartialPivLU<Eigen::MatrixXd>(lhs).solve(-sys.V);
    if (!c.allFinite())
      throw NumericalError("solve_coefficients: dense solve produced non-finite values");
  } else {
    const double contraction = pm.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(contraction < 1.0))
      throw GateError("solve_coefficients: Neumann series requires ||PM||_inf < 1");
    c = -sys.V;
    const double tol = 1e-12 * vnorm;
    bool converged = vnorm == 0.0;
    for (int term = 0; term < 100 && !converged; ++term) {
      const Eigen::VectorXd next = -sys.V - pm * c;
      converged = (next - c).lpNorm<Eigen::Infinity>() <= tol;
      c = next;
    }
    if (!converged)
      throw NumericalError("solve_coefficients: Neumann series did not converge in 100 terms");
  }

  const double residual = (c + pm * c + sys.V).lpNorm<Eigen::Infinity>();
  if (!(residual <= 1e-10 * std::max(vnorm, 1e-300)))
    throw NumericalError("solve_coefficients: residual exceeds 1e-10 * ||V||");
  sys.C = c;
  return sys.C;
}

SolveMethod parse_method(const std::string& name) {
  if (name == "dense") return SolveMethod::Dense;
  if (name == "neumann") return SolveMethod::Neumann;
  throw InputError("unknown solve method: " + name);
}

SystemDiagnostics system_diagnostics(const InteractionSystem& sys) {
  SystemDiagnostics diag;
  if (sys.num_voids() > 0) {
    diag.pm_inf_norm = sys.interaction_product().cwiseAbs().rowwise().sum().maxCoeff();
    diag.neg_m_eig_min = std::numeric_limits<double>::infinity();
    diag.neg_m_eig_max = -std::numeric_limits<double>::infinity();
    for (const DipoleMatrix& m : sys.M) {
      Eigen::SelfAdjointEigenSolver<Mat6> es(-m.m);
      diag.neg_m_eig_min = std::min(diag.neg_m_eig_min, es.eigenvalues().minCoeff());
      diag.neg_m_eig_max = std::max(diag.neg_m_eig_max, es.eigenvalues().maxCoeff());
    }
  }
  diag.gate_ok = diag.pm_inf_norm < 1.0;

  if (sys.C.size() == 6 * sys.num_voids() && sys.C.size() > 0) {
    const Eigen::MatrixXd pm = sys.interaction_product();
    diag.residual_inf = (sys.C + pm * sys.C + sys.V).lpNorm<Eigen::Infinity>();
    Eigen::VectorXd mc(sys.C.size());
    for (int k = 0; k < sys.num_voids(); ++k)
      mc.segment<6>(6 * k) = sys.M[std::size_t(k)].m * sys.C.segment<6>(6 * k);
    const double mc2 = mc.squaredNorm();
    if (mc2 > 0.0) diag.energy_ratio = mc.dot(sys.P * mc) / mc2;
    const double v2 = sys.V.squaredNorm();
    if (v2 > 0.0) diag.stability_ratio = sys.C.squaredNorm() / v2;
  }
  return diag;
}

} // namespace mesovoid
