#include "homog/errors.hpp"
#include "homog/lattice.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

TEST_CASE("spec validation") {
  homog::LatticeSpec spec{homog::LatticeFamily::primitive, {1, 1, 1}, 16, 0.25, true};
  CHECK_NOTHROW(spec.validate());
  auto bad = spec;
  bad.resolution = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.relative_density = 0.01;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.relative_density = 0.99;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.cells = {0, 1, 1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (auto f : {homog::LatticeFamily::primitive, homog::LatticeFamily::gyroid,
                 homog::LatticeFamily::diamond, homog::LatticeFamily::iwp,
                 homog::LatticeFamily::bcc}) {
    CHECK(homog::family_from_string(homog::to_string(f)) == f);
  }
  CHECK_THROWS_AS(homog::family_from_string("octet"), std::invalid_argument);
}

TEST_CASE("level set samples cell-centered coordinates") {
  const int res = 8;
  const auto phi = homog::tpms_level_set(homog::LatticeFamily::primitive, res);
  REQUIRE(phi.size() == std::size_t(res * res * res));
  const double x0 = 2.0 * std::numbers::pi * 0.5 / res;
  CHECK(phi[0] == doctest::Approx(3.0 * std::cos(x0)).epsilon(1e-14));
}

TEST_CASE("primitive level set has full cubic symmetry") {
  const int res = 12;
  const auto phi = homog::tpms_level_set(homog::LatticeFamily::primitive, res);
  auto at = [&](int i, int j, int k) { return phi[std::size_t((i * res + j) * res + k)]; };
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      for (int k = 0; k < res; ++k) {
        CHECK(at(i, j, k) == doctest::Approx(at(j, i, k)).epsilon(1e-12));
        CHECK(at(i, j, k) == doctest::Approx(at(res - 1 - i, j, k)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("gyroid magnitude is invariant under the half-period shift") {
  const int res = 16;
  const auto phi = homog::tpms_level_set(homog::LatticeFamily::gyroid, res);
  auto at = [&](int i, int j, int k) {
    return phi[std::size_t((i * res + j) * res + k)];
  };
  const int s = res / 2;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      for (int k = 0; k < res; ++k) {
        const double shifted = at((i + s) % res, (j + s) % res, (k + s) % res);
        CHECK(std::abs(at(i, j, k)) == doctest::Approx(std::abs(shifted)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("bcc distance field has cubic symmetry") {
  const int res = 10;
  const auto d = homog::bcc_strut_distance(res);
  auto at = [&](int i, int j, int k) { return d[std::size_t((i * res + j) * res + k)]; };
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      for (int k = 0; k < res; ++k) {
        CHECK(at(i, j, k) == doctest::Approx(at(j, i, k)).epsilon(1e-12));
        CHECK(at(i, j, k) == doctest::Approx(at(k, j, i)).epsilon(1e-12));
        CHECK(at(i, j, k) == doctest::Approx(at(res - 1 - i, j, k)).epsilon(1e-12));
      }
    }
  }
  // The cell center lies on every strut.
  const int c = res / 2;
  CHECK(at(c, c, c) <= 0.1);
}

TEST_CASE("threshold hits an attainable target") {
  std::vector<double> field(1000);
  for (std::size_t i = 0; i < field.size(); ++i) field[i] = double(i);
  const double t = homog::density_threshold(field, 0.5);
  std::size_t below = 0;
  for (double v : field) below += (v <= t);
  CHECK(std::abs(double(below) / double(field.size()) - 0.5) <= 0.005);
}

TEST_CASE("unattainable density is reported") {
  std::vector<double> constant(64, 1.0);
  CHECK_THROWS_WITH_AS(homog::density_threshold(constant, 0.5),
                       doctest::Contains("density unattainable"), homog::generation_error);
}

TEST_CASE("generated densities land within the contract") {
  homog::LatticeSpec spec{homog::LatticeFamily::primitive, {1, 1, 1}, 16, 0.25, true};
  const auto sheet = homog::generate_tpms(spec);
  CHECK(std::abs(sheet.solid_fraction() - 0.25) <= 0.005);

  spec.sheet = false;
  spec.relative_density = 0.5;
  const auto network = homog::generate_tpms(spec);
  CHECK(std::abs(network.solid_fraction() - 0.5) <= 0.005);

  homog::LatticeSpec bcc{homog::LatticeFamily::bcc, {1, 1, 1}, 48, 0.2, false};
  const auto strut = homog::generate_bcc(bcc);
  CHECK(std::abs(strut.solid_fraction() - 0.2) <= 0.005);
}

TEST_CASE("coarse grids report unattainable targets honestly") {
  homog::LatticeSpec spec{homog::LatticeFamily::primitive, {1, 1, 1}, 16, 0.2, true};
  CHECK_THROWS_AS(homog::generate_tpms(spec), homog::generation_error);
}

TEST_CASE("multi-cell grids tile the single cell") {
  homog::LatticeSpec spec{homog::LatticeFamily::gyroid, {2, 1, 3}, 16, 0.3, true};
  const auto g = homog::generate_tpms(spec);
  CHECK(g.nx == 32);
  CHECK(g.ny == 16);
  CHECK(g.nz == 48);
  for (std::size_t i = 0; i < g.nx; ++i) {
    for (std::size_t j = 0; j < g.ny; ++j) {
      for (std::size_t k = 0; k < g.nz; ++k) {
        CHECK(g(i, j, k) == g(i % 16, j % 16, k % 16));
      }
    }
  }
  // Tiling preserves the cell density exactly.
  homog::LatticeSpec one = spec;
  one.cells = {1, 1, 1};
  CHECK(g.solid_fraction() == homog::generate_tpms(one).solid_fraction());
}

TEST_CASE("skins add solid layers and keep the interior") {
  homog::VoxelGrid g(2, 2, 2);
  g(0, 0, 0) = 1;
  const auto s = homog::add_skins(g, 1, 2, 3);
  CHECK(s.nx == 2);
  CHECK(s.ny == 2);
  CHECK(s.nz == 5);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(s(i, j, 0) == 3);
      CHECK(s(i, j, 3) == 3);
      CHECK(s(i, j, 4) == 3);
    }
  }
  CHECK(s(0, 0, 1) == 1);
  CHECK(s(1, 1, 1) == 0);
  const auto same = homog::add_skins(g, 0, 0, 1);
  CHECK(same.data == g.data);
  CHECK_THROWS_AS(homog::add_skins(g, -1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(homog::add_skins(g, 0, 0, 0), std::invalid_argument);
}
