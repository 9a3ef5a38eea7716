#pragma once

#include "homog/element.hpp"
#include "homog/plate_homog.hpp"
#include "homog/solver.hpp"
#include "homog/voxel_grid.hpp"

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace homog {

struct ThermalElement {
  Eigen::Matrix<double, 8, 8> kt = Eigen::Matrix<double, 8, 8>::Zero();
  std::array<GradMatrix, 8> grad_ns{};
  double det_j = 0.0;
};

// kt = sum_g grad^T (k_s I) grad det_j. Shares the element's shape gradients.
ThermalElement thermal_element(double k_s, double dx, double dy, double dz);

// Thickness-integrated in-plane conductance (full solid gives k_s * h * I);
// per_thickness divides by h.
struct ConductionResult {
  Eigen::Matrix2d k_hom = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d per_thickness = Eigen::Matrix2d::Zero();
  std::vector<double> solver_residuals;
  std::vector<int> solver_iterations;
};

// Scalar analogue of the plate pipeline: unit macroscopic gradients along x
// and y, in-plane periodic and z-free, one anchored temperature DOF, flux
// recovered as k_s (grad_macro - grad t) and integrated over the area.
ConductionResult homogenize_thermal(const VoxelGrid& grid, double k_s, const PlateGeometry& geom,
                                    const SolverOptions& opts = {});

}  // namespace homog
