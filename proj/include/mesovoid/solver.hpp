#pragma once

#include "mesovoid/background.hpp"
#include "mesovoid/cloud.hpp"
#include "mesovoid/sphere_dipole.hpp"

#include <optional>
#include <string>
#include <vector>

// Block-linear system coupling the cavity strain coefficients:
//   (I + P M) C = -V,
// where V stacks the background strain at the cavity centres, M is the
// block diagonal of dipole matrices and P carries the hessian kernel
// between distinct centres (zero diagonal blocks).

namespace mesovoid {

enum class SolveMethod { Dense, Neumann };

struct InteractionSystem {
  Eigen::MatrixXd P;           // 6n x 6n, zero 6x6 diagonal blocks
  std::vector<DipoleMatrix> M; // one per cavity
  Eigen::VectorXd V;           // background strains at the centres
  Eigen::VectorXd C;           // solution; empty until solved

  int num_voids() const { return int(M.size()); }

  // P * blockdiag(M): the contraction operator of the Neumann series.
  Eigen::MatrixXd interaction_product() const;
};

// Validates the cloud and the source clearance, then fills P, M, V.
InteractionSystem assemble_system(const Cloud& cloud, const BackgroundField& bg,
                                  double gate_c = 0.2);

// Solves the system, stores the solution in sys.C and returns it.
// Dense: partial-pivot LU with a residual check (NumericalError on failure).
// Neumann: iterates C <- -V - (PM) C; requires ||PM||_inf < 1 (GateError)
// and convergence of the increment to 1e-12 * ||V||_inf within 100 terms
// (NumericalError otherwise).
Eigen::VectorXd solve_coefficients(InteractionSystem& sys, SolveMethod method);

SolveMethod parse_method(const std::string& name); // "dense" | "neumann"

struct SystemDiagnostics {
  double pm_inf_norm = 0.0;      // ||P M||_inf, the contraction estimate
  double neg_m_eig_min = 0.0;    // extreme eigenvalues over all blocks of -M
  double neg_m_eig_max = 0.0;
  bool gate_ok = false;          // pm_inf_norm < 1
  // Populated once sys.C holds a solution:
  std::optional<double> residual_inf;    // ||(I + PM) C + V||_inf
  std::optional<double> energy_ratio;    // <MC, PMC> / <MC, MC>
  std::optional<double> stability_ratio; // |C|^2 / |V|^2
};
SystemDiagnostics system_diagnostics(const InteractionSystem& sys);

} // namespace mesovoid
