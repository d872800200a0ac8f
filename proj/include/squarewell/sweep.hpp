#pragma once

// Two-parameter survey of homogeneous conditions in the angle form
// cos(t) psi + sin(t) L psi' = 0 at each end. Each cell records the
// negative-state count, whether an exact zero mode exists, and the
// ground-state energy. Cells are independent; assembly is row-major in
// (theta0, thetaL).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "squarewell/bc_algebra.hpp"
#include "squarewell/boundary.hpp"
#include "squarewell/spectrum.hpp"

namespace squarewell {

struct SweepCell {
  double theta0 = 0.0;
  double thetaL = 0.0;
  int negative_count = 0;
  bool zero_mode = false;
  double ground_energy = 0.0;
};

struct SweepResult {
  std::vector<double> theta0_grid;
  std::vector<double> thetaL_grid;
  std::vector<SweepCell> cells;  // row-major: theta0 outer, thetaL inner
};

inline SweepCell sweep_cell(double theta0, double thetaL, double ql_max) {
  const BoundaryCondition bc = condition_from_angles(theta0, thetaL);
  SweepCell cell;
  cell.theta0 = theta0;
  cell.thetaL = thetaL;
  const auto scan = negative_energy_scan(bc, 1.0, ql_max);
  cell.negative_count = static_cast<int>(scan.roots.size());
  cell.zero_mode = zero_mode_detect(bc).has_value();
  if (!scan.roots.empty()) {
    const double s = scan.roots.back();
    cell.ground_energy = -s * s;
  } else if (cell.zero_mode) {
    cell.ground_energy = 0.0;
  } else {
    std::vector<double> roots, degen;
    detail::positive_roots(bc, 1, 40.0 * M_PI, roots, degen);
    if (roots.empty())
      throw IncompleteSpectrum("sweep_cell: no ground state found below kL limit");
    cell.ground_energy = roots.front() * roots.front();
  }
  return cell;
}

inline SweepResult bc_sweep(const std::vector<double>& theta0_grid,
                            const std::vector<double>& thetaL_grid,
                            double ql_max = 50.0) {
  if (theta0_grid.size() < 2 || thetaL_grid.size() < 2)
    throw std::invalid_argument("bc_sweep: need at least 2 grid values per axis");
  SweepResult out;
  out.theta0_grid = theta0_grid;
  out.thetaL_grid = thetaL_grid;
  out.cells.reserve(theta0_grid.size() * thetaL_grid.size());
  for (double t0 : theta0_grid)
    for (double tL : thetaL_grid) out.cells.push_back(sweep_cell(t0, tL, ql_max));
  return out;
}

// Uniform angle grid [0, pi) with `points` entries, as used by the CLI.
inline std::vector<double> uniform_angle_grid(int points) {
  if (points < 2) throw std::invalid_argument("uniform_angle_grid: need >= 2 points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = i * M_PI / points;
  return g;
}

}  // namespace squarewell
