#include "homog/dof_map.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {

namespace {

// Node numbers for one element, pre-aliased, in the fixed corner order
// (-,-,-) (+,-,-) (+,+,-) (-,+,-) then +z.
struct NodeNumbering {
  std::size_t nx, ny, nz;
  bool wrap_z;

  std::int64_t node(std::size_t jx, std::size_t jy, std::size_t jz) const {
    if (jx == nx) jx = 0;
    if (jy == ny) jy = 0;
    if (wrap_z && jz == nz) jz = 0;
    return (std::int64_t(jx) * std::int64_t(ny + 1) + std::int64_t(jy)) * std::int64_t(nz + 1) +
           std::int64_t(jz);
  }

  void corners(std::size_t ix, std::size_t iy, std::size_t iz, std::int64_t out[8]) const {
    out[0] = node(ix, iy, iz);
    out[1] = node(ix + 1, iy, iz);
    out[2] = node(ix + 1, iy + 1, iz);
    out[3] = node(ix, iy + 1, iz);
    out[4] = node(ix, iy, iz + 1);
    out[5] = node(ix + 1, iy, iz + 1);
    out[6] = node(ix + 1, iy + 1, iz + 1);
    out[7] = node(ix, iy + 1, iz + 1);
  }
};

void check_not_empty(const VoxelGrid& grid) {
  if (grid.solid_count() == 0) {
    throw std::invalid_argument("empty structure: grid contains no solid voxels");
  }
}

std::int64_t nominal_node_count(const VoxelGrid& grid) {
  return std::int64_t(grid.nx + 1) * std::int64_t(grid.ny + 1) * std::int64_t(grid.nz + 1);
}

}  // namespace

DofMap build_dof_map(const VoxelGrid& grid, double dz, double thickness,
                     Periodicity periodicity) {
  check_not_empty(grid);
  if (!(dz > 0.0 && thickness > 0.0)) {
    throw std::invalid_argument("dz and thickness must be positive");
  }
  if (std::abs(thickness - double(grid.nz) * dz) > 1e-12 * thickness) {
    throw std::invalid_argument("thickness does not equal nz * dz");
  }

  DofMap map;
  map.total_dofs = 3 * nominal_node_count(grid);
  map.active_mask.assign(grid.size(), 0);
  map.n_active = grid.solid_count();
  map.edof.reserve(24 * map.n_active);
  map.z_active.reserve(map.n_active);

  const NodeNumbering numbering{grid.nx, grid.ny, grid.nz, periodicity == Periodicity::full};
  std::int64_t corners[8];
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      for (std::size_t iz = 0; iz < grid.nz; ++iz) {
        if (grid(ix, iy, iz) == 0) continue;
        map.active_mask[grid.index(ix, iy, iz)] = 1;
        numbering.corners(ix, iy, iz, corners);
        for (int a = 0; a < 8; ++a) {
          const std::int64_t base = 3 * corners[a];
          map.edof.push_back(std::int32_t(base));
          map.edof.push_back(std::int32_t(base + 1));
          map.edof.push_back(std::int32_t(base + 2));
        }
        map.z_active.push_back((double(iz) + 0.5) * dz - thickness / 2.0);
      }
    }
  }
  return map;
}

ScalarDofMap build_scalar_dof_map(const VoxelGrid& grid, Periodicity periodicity) {
  check_not_empty(grid);

  ScalarDofMap map;
  map.total_dofs = nominal_node_count(grid);
  map.active_mask.assign(grid.size(), 0);
  map.n_active = grid.solid_count();
  map.edof.reserve(8 * map.n_active);

  const NodeNumbering numbering{grid.nx, grid.ny, grid.nz, periodicity == Periodicity::full};
  std::int64_t corners[8];
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      for (std::size_t iz = 0; iz < grid.nz; ++iz) {
        if (grid(ix, iy, iz) == 0) continue;
        map.active_mask[grid.index(ix, iy, iz)] = 1;
        numbering.corners(ix, iy, iz, corners);
        for (int a = 0; a < 8; ++a) {
          map.edof.push_back(std::int32_t(corners[a]));
        }
      }
    }
  }
  return map;
}

std::vector<std::uint8_t> active_values(const VoxelGrid& grid, const DofMap& map) {
  std::vector<std::uint8_t> values;
  values.reserve(map.n_active);
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      for (std::size_t iz = 0; iz < grid.nz; ++iz) {
        if (grid(ix, iy, iz) != 0) values.push_back(grid(ix, iy, iz));
      }
    }
  }
  return values;
}

}  // namespace homog
