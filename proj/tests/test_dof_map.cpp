#include "homog/dof_map.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

TEST_CASE("single-cube map collapses periodic corners") {
  homog::VoxelGrid g(1, 1, 1, 1);
  const auto map = homog::build_dof_map(g, 10.0, 10.0);
  CHECK(map.n_active == 1);
  CHECK(map.total_dofs == 24);  // nominal 2x2x2 nodes, aliases unreferenced
  const std::vector<std::int32_t> expected = {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2,
                                              3, 4, 5, 3, 4, 5, 3, 4, 5, 3, 4, 5};
  CHECK(std::vector<std::int32_t>(map.edof.begin(), map.edof.end()) == expected);
  CHECK(map.z_active == std::vector<double>{0.0});
}

TEST_CASE("full periodicity aliases z as well") {
  homog::VoxelGrid g(1, 1, 1, 1);
  const auto map = homog::build_dof_map(g, 1.0, 1.0, homog::Periodicity::full);
  for (int i = 0; i < 8; ++i) {
    CHECK(map.edof[3 * i] == 0);
    CHECK(map.edof[3 * i + 1] == 1);
    CHECK(map.edof[3 * i + 2] == 2);
  }
}

TEST_CASE("element centers straddle the midplane") {
  homog::VoxelGrid g(1, 1, 2, 1);
  const auto map = homog::build_dof_map(g, 5.0, 10.0);
  CHECK(map.z_active == std::vector<double>{-2.5, 2.5});
}

TEST_CASE("only solid voxels get rows, in x-major order") {
  homog::VoxelGrid g(2, 1, 2);
  g(0, 0, 1) = 1;
  g(1, 0, 0) = 1;
  const auto map = homog::build_dof_map(g, 0.5, 1.0);
  CHECK(map.n_active == 2);
  // (0,0,1) is visited before (1,0,0).
  CHECK(map.z_active[0] == doctest::Approx(0.25));
  CHECK(map.z_active[1] == doctest::Approx(-0.25));
  CHECK(map.active_mask[g.index(0, 0, 1)] == 1);
  CHECK(map.active_mask[g.index(1, 0, 0)] == 1);
  CHECK(map.active_mask[g.index(0, 0, 0)] == 0);
}

TEST_CASE("node numbering is row-major over the nominal grid") {
  homog::VoxelGrid g(2, 2, 1, 1);
  const auto map = homog::build_dof_map(g, 1.0, 1.0);
  // Element (0,0,0): first corner is node (0,0,0) -> dof 0; second corner
  // (1,0,0) -> node (1*(ny+1) + 0)*(nz+1) + 0 = 6 -> dof 18.
  CHECK(map.edof[0] == 0);
  CHECK(map.edof[3] == 18);
  // x = nx wraps: element (1,*,*) corner at jx=2 maps back to jx=0.
  const std::int32_t* e2 = map.element(2);
  CHECK(e2[3] == 0 * 3);  // corner (2,0,0) -> node (0,0,0)
}

TEST_CASE("empty structure is rejected") {
  homog::VoxelGrid g(2, 2, 2);
  CHECK_THROWS_WITH_AS(homog::build_dof_map(g, 1.0, 2.0),
                       doctest::Contains("empty structure"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(homog::build_scalar_dof_map(g), doctest::Contains("empty structure"),
                       std::invalid_argument);
}

TEST_CASE("thickness must tile into voxel layers") {
  homog::VoxelGrid g(1, 1, 2, 1);
  CHECK_THROWS_AS(homog::build_dof_map(g, 1.0, 3.0), std::invalid_argument);
}

TEST_CASE("scalar map mirrors the vector map nodes") {
  homog::VoxelGrid g(1, 1, 1, 1);
  const auto map = homog::build_scalar_dof_map(g);
  CHECK(map.total_dofs == 8);
  const std::vector<std::int32_t> expected = {0, 0, 0, 0, 1, 1, 1, 1};
  CHECK(std::vector<std::int32_t>(map.edof.begin(), map.edof.end()) == expected);
}

TEST_CASE("active values follow edof row order") {
  homog::VoxelGrid g(2, 1, 1);
  g(0, 0, 0) = 2;
  g(1, 0, 0) = 5;
  const auto map = homog::build_dof_map(g, 1.0, 1.0);
  CHECK(homog::active_values(g, map) == std::vector<std::uint8_t>{2, 5});
}
