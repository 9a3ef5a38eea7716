#pragma once

#include "homog/voxel_grid.hpp"

#include <cstdint>
#include <vector>

namespace homog {

// in_plane wraps x and y only; full wraps z as well.
enum class Periodicity { in_plane, full };

// Node grid is (nx+1) x (ny+1) x (nz+1), numbered row-major in that order,
// with periodic faces aliased back to index 0 before DOFs are assigned.
// total_dofs stays at the nominal (unaliased) count; aliased node numbers are
// simply never referenced.
struct DofMap {
  std::vector<std::int32_t> edof;       // n_active x 24, row-major
  std::vector<double> z_active;         // element-center z, plate midplane at 0
  std::vector<std::uint8_t> active_mask;  // per voxel, grid storage order
  std::size_t n_active = 0;
  std::int64_t total_dofs = 0;

  const std::int32_t* element(std::size_t e) const { return edof.data() + 24 * e; }
};

// Scalar variant (one DOF per node) for conduction problems.
struct ScalarDofMap {
  std::vector<std::int32_t> edof;  // n_active x 8, row-major
  std::vector<std::uint8_t> active_mask;
  std::size_t n_active = 0;
  std::int64_t total_dofs = 0;

  const std::int32_t* element(std::size_t e) const { return edof.data() + 8 * e; }
};

// Elements are visited x-major (ix, then iy, then iz); only solid voxels get
// rows. thickness must equal nz * dz. Throws on an all-void grid.
DofMap build_dof_map(const VoxelGrid& grid, double dz, double thickness,
                     Periodicity periodicity = Periodicity::in_plane);

ScalarDofMap build_scalar_dof_map(const VoxelGrid& grid,
                                  Periodicity periodicity = Periodicity::in_plane);

// Per-active-element voxel values in edof row order (material IDs for
// heterogeneous fields).
std::vector<std::uint8_t> active_values(const VoxelGrid& grid, const DofMap& map);

}  // namespace homog
