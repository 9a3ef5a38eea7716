#pragma once

#include "homog/material.hpp"
#include "homog/solver.hpp"
#include "homog/voxel_grid.hpp"

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace homog {

// Plate RVE geometry. The cell is cubic: cell_size = thickness / cells_z,
// Lx = cells_x * cell_size, Lz = thickness. A skinned stack keeps the same
// thickness: the extra layers shrink the voxel height thickness / nz.
struct PlateGeometry {
  double thickness = 0.0;
  std::array<int, 3> cells = {1, 1, 1};

  struct Resolved {
    double lx, ly, lz;
    double dx, dy, dz;
    double area;  // Lx * Ly, the normalization area
  };
  Resolved resolve(const VoxelGrid& grid) const;
};

// Generalized plate stiffness. Rows/columns 0..2 are membrane (Voigt
// [11, 22, 12]), rows/columns 3..5 bending; off blocks couple the two.
struct AbdMatrix {
  Matrix6 m = Matrix6::Zero();

  Eigen::Matrix3d a() const { return m.topLeftCorner<3, 3>(); }
  Eigen::Matrix3d b() const { return m.topRightCorner<3, 3>(); }
  Eigen::Matrix3d d() const { return m.bottomRightCorner<3, 3>(); }
};

struct PlateResult {
  AbdMatrix abd;           // symmetrized
  Matrix6 raw;             // pre-symmetrization, for diagnostics
  double asymmetry = 0.0;  // pre_symmetry_check(raw)
  double density = 0.0;    // solid fraction of the analyzed grid
  std::vector<double> solver_residuals;
  std::vector<int> solver_iterations;
};

// max|m - m^T| / max|m|.
double pre_symmetry_check(const Matrix6& raw);

// In-plane periodic, out-of-plane free homogenization: six macro load cases
// (three membrane, three bending), stress extraction sigma = C (E - B u),
// ABD accumulated as 0th and 1st z-moments over the plate area.
PlateResult homogenize_plate(const VoxelGrid& grid, const MaterialField& field,
                             const PlateGeometry& geom, const SolverOptions& opts = {});

}  // namespace homog
