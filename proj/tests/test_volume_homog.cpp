#include <doctest.h>

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "homog/lattice.hpp"
#include "homog/material.hpp"
#include "homog/plate_homog.hpp"
#include "homog/volume_homog.hpp"
#include "homog/voxel_grid.hpp"

using namespace homog;

namespace {

VoxelGrid full_solid(int nx, int ny, int nz) {
  VoxelGrid g(nx, ny, nz);
  for (auto& v : g.data) v = 1;
  return g;
}

SolverOptions tight() {
  SolverOptions o;
  o.tol = 1e-10;
  o.maxiter = 20000;
  return o;
}

}  // namespace

TEST_CASE("full solid recovers the constituent tensor exactly") {
  // Uniform material under full periodicity: the corrector vanishes, so C^H
  // equals C up to quadrature roundoff, not just solver tolerance.
  ElasticTensor6 c = isotropic_elasticity(1215.0, 0.35);
  auto field = MaterialField::homogeneous(c);
  VoxelGrid g = full_solid(3, 3, 3);
  VolumeResult res = homogenize_volume(g, field, 1.0, 1.0, 1.0, tight());
  CHECK((res.c_h.c - c.c).cwiseAbs().maxCoeff() < 1e-12 * c.c(0, 0));
  CHECK(res.solver_residuals.size() == 6);
  CHECK((res.c_h.c - res.c_h.c.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("z-laminate interpolates between series and parallel bounds") {
  // Equal-fraction stack of E=1 and E=2 at nu=0: normal-to-layer stiffness is
  // the harmonic mean 4/3, in-plane stiffness the arithmetic mean 3/2.
  VoxelGrid g = full_solid(2, 2, 4);
  std::vector<std::uint8_t> ids;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k) ids.push_back(k < 2 ? 1 : 2);
  std::map<int, IsotropicMaterial> table{{1, {1.0, 0.0}}, {2, {2.0, 0.0}}};
  auto field = multi_material_field(ids, table);

  VolumeResult res = homogenize_volume(g, field, 1.0, 1.0, 0.5, tight());
  CHECK(res.c_h.c(2, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
  CHECK(res.c_h.c(0, 0) == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(res.c_h.c(1, 1) == doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("solid disconnected along x carries no x stiffness") {
  // A slab occupying half the cell is severed by the void in x but continuous
  // in y and z, so only the first normal mode collapses.
  VoxelGrid g(4, 4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) g.data[g.index(i, j, k)] = 1;

  auto field = MaterialField::homogeneous(isotropic_elasticity(1.0, 0.3));
  VolumeResult res = homogenize_volume(g, field, 1.0, 1.0, 1.0, tight());
  CHECK(res.c_h.c(0, 0) < 1e-6);
  CHECK(res.c_h.c(1, 1) > 0.1);
  CHECK(res.c_h.c(2, 2) > 0.1);
}

TEST_CASE("effective tensor obeys the volume-average upper bound") {
  LatticeSpec spec;
  spec.family = LatticeFamily::primitive;
  spec.resolution = 16;
  spec.relative_density = 0.25;
  spec.sheet = true;
  VoxelGrid g = generate_tpms(spec);

  ElasticTensor6 c = isotropic_elasticity(1.0, 0.3);
  auto field = MaterialField::homogeneous(c);
  SolverOptions opts;
  opts.tol = 1e-8;
  VolumeResult res = homogenize_volume(g, field, 1.0, 1.0, 1.0, opts);

  Matrix6 gap = g.solid_fraction() * c.c - res.c_h.c;
  Eigen::SelfAdjointEigenSolver<Matrix6> eig(gap);
  CHECK(eig.eigenvalues().minCoeff() > -1e-9);
  // And the effective tensor itself stays positive semidefinite.
  Eigen::SelfAdjointEigenSolver<Matrix6> eig2(res.c_h.c);
  CHECK(eig2.eigenvalues().minCoeff() > -1e-9);
}

TEST_CASE("static condensation reproduces plane stress for isotropy") {
  ElasticTensor6 c = isotropic_elasticity(1.0, 0.3);
  ReducedStiffness3 q = static_condensation(c);
  CHECK(q.q(0, 0) == doctest::Approx(1.0 / 0.91).epsilon(1e-9));
  CHECK(q.q(0, 0) == doctest::Approx(1.098901).epsilon(1e-6));
  CHECK(q.q(0, 1) == doctest::Approx(0.3 / 0.91).epsilon(1e-9));
  CHECK(q.q(0, 1) == doctest::Approx(0.329670).epsilon(1e-5));
  CHECK(q.q(2, 2) == doctest::Approx(1.0 / 2.6).epsilon(1e-9));
  CHECK((q.q - q.q.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // nu = 0 decouples the reduction entirely.
  ReducedStiffness3 q0 = static_condensation(isotropic_elasticity(2.0, 0.0));
  CHECK(q0.q(0, 0) == doctest::Approx(2.0));
  CHECK(q0.q(0, 1) == doctest::Approx(0.0));
  CHECK(q0.q(2, 2) == doctest::Approx(1.0));

  ElasticTensor6 bad = c;
  bad.c.row(2).setZero();
  bad.c.col(2).setZero();
  CHECK_THROWS_WITH_AS(static_condensation(bad), doctest::Contains("degenerate normal stiffness"),
                       std::invalid_argument);
}

TEST_CASE("analytic plate blocks scale as h and h^3/12") {
  ReducedStiffness3 q;
  q.q = Eigen::Matrix3d::Identity();
  AbdMatrix abd = analytic_abd(q, 10.0);
  CHECK(abd.a()(0, 0) == doctest::Approx(10.0));
  CHECK(abd.b().cwiseAbs().maxCoeff() == 0.0);
  CHECK(abd.d()(0, 0) == doctest::Approx(1000.0 / 12.0));
  for (int i = 0; i < 3; ++i)
    CHECK(abd.d()(i, i) / abd.a()(i, i) == doctest::Approx(100.0 / 12.0));
  CHECK_THROWS_AS(analytic_abd(q, 0.0), std::invalid_argument);
}

TEST_CASE("condensed volume result matches the plate membrane block") {
  // For a full solid the two pipelines agree exactly on A; the bending block
  // differs by the plate's staircase z-sampling, so only A is compared.
  const double h = 10.0;
  ElasticTensor6 c = isotropic_elasticity(1.0, 0.3);
  auto field = MaterialField::homogeneous(c);

  VoxelGrid g3 = full_solid(2, 2, 2);
  VolumeResult vol = homogenize_volume(g3, field, 1.0, 1.0, 1.0, tight());
  AbdMatrix from_volume = analytic_abd(static_condensation(vol.c_h), h);

  PlateResult plate = homogenize_plate(g3, field, {h, {1, 1, 1}}, tight());
  double scale = from_volume.a().cwiseAbs().maxCoeff();
  CHECK((from_volume.a() - plate.abd.a()).cwiseAbs().maxCoeff() < 1e-6 * scale);
}

TEST_CASE("volume pipeline validates voxel dimensions") {
  VoxelGrid g = full_solid(2, 2, 2);
  auto field = MaterialField::homogeneous(isotropic_elasticity(1.0, 0.3));
  CHECK_THROWS_AS(homogenize_volume(g, field, 0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(homogenize_volume(g, field, 1.0, -1.0, 1.0), std::invalid_argument);
}
