#pragma once

#include "homog/material.hpp"
#include "homog/plate_homog.hpp"
#include "homog/solver.hpp"
#include "homog/voxel_grid.hpp"

#include <Eigen/Dense>
#include <vector>

namespace homog {

// Plane-stress reduced stiffness, Voigt order [e11, e22, g12].
struct ReducedStiffness3 {
  Eigen::Matrix3d q = Eigen::Matrix3d::Zero();
};

struct VolumeResult {
  ElasticTensor6 c_h;
  std::vector<double> solver_residuals;
  std::vector<int> solver_iterations;
};

// Fully periodic (x, y, z) homogenization under the six unit Voigt strains.
// C^H is extracted from the energy bilinear form, so the result is symmetric
// by construction before the final symmetrization.
VolumeResult homogenize_volume(const VoxelGrid& grid, const MaterialField& field, double dx,
                               double dy, double dz, const SolverOptions& opts = {});

// q[a][b] = c[I][J] - c[I][2] c[J][2] / c[2][2] over I, J in {0, 1, 5}:
// the sigma_33 = 0 reduction. Throws on c[2][2] <= 0.
ReducedStiffness3 static_condensation(const ElasticTensor6& c_h);

// Thickness-uniform plate: A = q h, B = 0, D = q h^3 / 12.
AbdMatrix analytic_abd(const ReducedStiffness3& q, double thickness);

}  // namespace homog
