#pragma once

#include "mesovoid/background.hpp"
#include "mesovoid/cloud.hpp"
#include "mesovoid/field_eval.hpp"
#include "mesovoid/solver.hpp"
#include "mesovoid/validation.hpp"

#include <filesystem>
#include <string>
#include <vector>

// File formats.  JSON for structured inputs/outputs (clouds, backgrounds,
// coefficients, reports), CSV and legacy-VTK for field samples.  All numbers
// are written in the shortest form that round-trips exactly, so identical
// data produces identical bytes.

namespace mesovoid {

// Shortest exact decimal representation of a double.
std::string format_double(double value);

// Malformed files throw InputError; structurally valid clouds that violate
// the geometric gates throw GateError naming the gate.
Cloud load_cloud(const std::filesystem::path& path, double gate_c = 0.2);
void save_cloud(const Cloud& cloud, const std::filesystem::path& path);

BackgroundField load_background(const std::filesystem::path& path);
void save_background(const BackgroundField& bg, const std::filesystem::path& path);

void save_solution(const Eigen::VectorXd& c, const SystemDiagnostics& diag,
                   const std::string& method, const std::filesystem::path& path);
Eigen::VectorXd load_coefficients(const std::filesystem::path& path,
                                  std::size_t expected_voids);

EvaluationGrid load_grid(const std::filesystem::path& path);

// Columns: x,y,z,ux,uy,uz,status.  Status 0 = exterior, k >= 1 = inside
// cavity k (1-based), -1 = near a point force; masked rows leave the
// displacement columns empty.
void write_field_csv(const std::vector<FieldSample>& samples,
                     const std::filesystem::path& path);

// Legacy-VTK POLYDATA with one point-data vector array "displacement";
// masked samples carry a zero vector.
void write_field_vtk(const std::vector<FieldSample>& samples,
                     const std::filesystem::path& path);

void write_check_report(const std::vector<CheckReport>& checks,
                        const std::filesystem::path& path);
void write_study_report(const StudyResult& result, const std::filesystem::path& path);

} // namespace mesovoid
