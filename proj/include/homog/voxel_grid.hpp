#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace homog {

// Dense structured voxel model. Value 0 is void, any value >= 1 is a material
// ID. Storage order is fixed: x slowest, z fastest.
struct VoxelGrid {
  std::size_t nx = 0, ny = 0, nz = 0;
  std::vector<std::uint8_t> data;

  VoxelGrid() = default;
  VoxelGrid(std::size_t nx_, std::size_t ny_, std::size_t nz_, std::uint8_t fill = 0);

  std::size_t size() const { return nx * ny * nz; }

  std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return (ix * ny + iy) * nz + iz;
  }

  std::uint8_t operator()(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return data[index(ix, iy, iz)];
  }
  std::uint8_t& operator()(std::size_t ix, std::size_t iy, std::size_t iz) {
    return data[index(ix, iy, iz)];
  }

  std::size_t solid_count() const;
  double solid_fraction() const;
};

// Binary format: magic "VXL1", three little-endian u32 (nx, ny, nz), then
// nx*ny*nz raw bytes in storage order. Loading rejects bad magic, zero
// dimensions, truncated payloads, and all-void content.
VoxelGrid load_vxl(const std::string& path);
void save_vxl(const VoxelGrid& grid, const std::string& path);

}  // namespace homog
