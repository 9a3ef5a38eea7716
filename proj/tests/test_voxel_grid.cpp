#include "homog/errors.hpp"
#include "homog/voxel_grid.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("voxel grid storage is row-major with z fastest") {
  homog::VoxelGrid g(2, 3, 4);
  g(1, 2, 3) = 7;
  CHECK(g.data[(1 * 3 + 2) * 4 + 3] == 7);
  CHECK(g.index(0, 0, 1) == 1);
  CHECK(g.index(0, 1, 0) == 4);
  CHECK(g.index(1, 0, 0) == 12);
  CHECK(g.size() == 24);
}

TEST_CASE("solid count and fraction") {
  homog::VoxelGrid g(2, 2, 2);
  g(0, 0, 0) = 1;
  g(1, 1, 1) = 2;
  CHECK(g.solid_count() == 2);
  CHECK(g.solid_fraction() == doctest::Approx(0.25));
}

TEST_CASE("voxel file round-trip preserves dims and payload") {
  homog::VoxelGrid g(3, 2, 5);
  for (std::size_t i = 0; i < g.size(); ++i) g.data[i] = std::uint8_t(i % 3);
  const auto path = temp_file("roundtrip.vxl");
  homog::save_vxl(g, path.string());
  const homog::VoxelGrid r = homog::load_vxl(path.string());
  CHECK(r.nx == 3);
  CHECK(r.ny == 2);
  CHECK(r.nz == 5);
  CHECK(r.data == g.data);
  std::filesystem::remove(path);
}

TEST_CASE("loading a missing file fails") {
  CHECK_THROWS_AS(homog::load_vxl(temp_file("does_not_exist.vxl").string()), homog::io_error);
}

TEST_CASE("bad magic is rejected") {
  const auto path = temp_file("badmagic.vxl");
  std::ofstream out(path, std::ios::binary);
  out << "NOPE" << std::string(12, '\0') << std::string(8, '\1');
  out.close();
  CHECK_THROWS_AS(homog::load_vxl(path.string()), homog::io_error);
  std::filesystem::remove(path);
}

TEST_CASE("truncated payload is rejected") {
  homog::VoxelGrid g(2, 2, 2, 1);
  const auto path = temp_file("trunc.vxl");
  homog::save_vxl(g, path.string());
  std::filesystem::resize_file(path, 16 + 3);
  CHECK_THROWS_AS(homog::load_vxl(path.string()), homog::io_error);
  std::filesystem::remove(path);
}

TEST_CASE("trailing bytes are rejected") {
  homog::VoxelGrid g(2, 2, 2, 1);
  const auto path = temp_file("trail.vxl");
  homog::save_vxl(g, path.string());
  std::ofstream out(path, std::ios::binary | std::ios::app);
  out << '\0';
  out.close();
  CHECK_THROWS_AS(homog::load_vxl(path.string()), homog::io_error);
  std::filesystem::remove(path);
}

TEST_CASE("all-void file is rejected on load") {
  homog::VoxelGrid g(2, 2, 2, 1);
  const auto path = temp_file("void.vxl");
  homog::save_vxl(g, path.string());
  std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
  f.seekp(16);
  for (int i = 0; i < 8; ++i) f.put('\0');
  f.close();
  CHECK_THROWS_AS(homog::load_vxl(path.string()), homog::io_error);
  std::filesystem::remove(path);
}

TEST_CASE("error messages name the path") {
  const auto path = temp_file("named.vxl");
  try {
    homog::load_vxl(path.string());
    FAIL("expected io_error");
  } catch (const homog::io_error& e) {
    CHECK(std::string(e.what()).find(path.string()) != std::string::npos);
  }
}
