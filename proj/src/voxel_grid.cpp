#include "homog/voxel_grid.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>

#include "homog/errors.hpp"

namespace homog {

VoxelGrid::VoxelGrid(std::size_t nx_, std::size_t ny_, std::size_t nz_, std::uint8_t fill)
    : nx(nx_), ny(ny_), nz(nz_), data(nx_ * ny_ * nz_, fill) {}

std::size_t VoxelGrid::solid_count() const {
  return static_cast<std::size_t>(
      std::count_if(data.begin(), data.end(), [](std::uint8_t v) { return v != 0; }));
}

double VoxelGrid::solid_fraction() const {
  if (data.empty()) return 0.0;
  return static_cast<double>(solid_count()) / static_cast<double>(data.size());
}

namespace {

constexpr char kMagic[4] = {'V', 'X', 'L', '1'};

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u32le(std::uint32_t v, unsigned char* p) {
  p[0] = static_cast<unsigned char>(v & 0xff);
  p[1] = static_cast<unsigned char>((v >> 8) & 0xff);
  p[2] = static_cast<unsigned char>((v >> 16) & 0xff);
  p[3] = static_cast<unsigned char>((v >> 24) & 0xff);
}

}  // namespace

VoxelGrid load_vxl(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw io_error("cannot open voxel file: " + path);

  std::array<unsigned char, 16> header{};
  if (std::fread(header.data(), 1, header.size(), f.get()) != header.size())
    throw io_error("truncated voxel header: " + path);
  if (!std::equal(kMagic, kMagic + 4, header.data()))
    throw io_error("not a VXL1 file: " + path);

  const std::uint32_t nx = read_u32le(header.data() + 4);
  const std::uint32_t ny = read_u32le(header.data() + 8);
  const std::uint32_t nz = read_u32le(header.data() + 12);
  if (nx == 0 || ny == 0 || nz == 0)
    throw io_error("voxel file declares a zero dimension: " + path);

  VoxelGrid grid(nx, ny, nz);
  if (std::fread(grid.data.data(), 1, grid.data.size(), f.get()) != grid.data.size())
    throw io_error("truncated voxel payload: " + path);
  if (std::fgetc(f.get()) != EOF)
    throw io_error("trailing bytes after voxel payload: " + path);
  if (grid.solid_count() == 0)
    throw io_error("voxel file contains no solid voxels: " + path);
  return grid;
}

void save_vxl(const VoxelGrid& grid, const std::string& path) {
  if (grid.nx == 0 || grid.ny == 0 || grid.nz == 0)
    throw io_error("refusing to write grid with a zero dimension: " + path);

  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw io_error("cannot create voxel file: " + path);

  std::array<unsigned char, 16> header{};
  std::copy(kMagic, kMagic + 4, header.data());
  write_u32le(static_cast<std::uint32_t>(grid.nx), header.data() + 4);
  write_u32le(static_cast<std::uint32_t>(grid.ny), header.data() + 8);
  write_u32le(static_cast<std::uint32_t>(grid.nz), header.data() + 12);

  if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size() ||
      std::fwrite(grid.data.data(), 1, grid.data.size(), f.get()) != grid.data.size())
    throw io_error("short write to voxel file: " + path);
  if (std::fflush(f.get()) != 0) throw io_error("flush failed for voxel file: " + path);
}

}  // namespace homog
