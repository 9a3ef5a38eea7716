#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "homog/lattice.hpp"
#include "homog/plate_homog.hpp"
#include "homog/thermal_homog.hpp"
#include "homog/voxel_grid.hpp"

using namespace homog;

namespace {

VoxelGrid full_solid(int nx, int ny, int nz) {
  VoxelGrid g(nx, ny, nz);
  for (auto& v : g.data) v = 1;
  return g;
}

}  // namespace

TEST_CASE("conduction element annihilates constant temperature") {
  ThermalElement el = thermal_element(60.5, 1.0, 0.5, 0.25);
  Eigen::Matrix<double, 8, 1> ones = Eigen::Matrix<double, 8, 1>::Ones();
  double scale = el.kt.cwiseAbs().maxCoeff();
  CHECK(scale > 0.0);
  CHECK((el.kt * ones).cwiseAbs().maxCoeff() < 1e-12 * scale);
  CHECK((el.kt - el.kt.transpose()).cwiseAbs().maxCoeff() < 1e-12 * scale);
  CHECK(el.det_j == doctest::Approx(1.0 * 0.5 * 0.25 / 8.0));

  // Exactly one rigid (constant) mode.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> eig(el.kt);
  CHECK(std::abs(eig.eigenvalues()(0)) < 1e-10 * scale);
  CHECK(eig.eigenvalues()(1) > 1e-6 * scale);

  ThermalElement twice = thermal_element(121.0, 1.0, 0.5, 0.25);
  CHECK((twice.kt - 2.0 * el.kt).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(thermal_element(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_element(-3.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("full solid conducts k_s * h in both directions") {
  // Uniform conductor: the corrector is zero and the integral is exact.
  VoxelGrid g = full_solid(4, 4, 2);
  ConductionResult res = homogenize_thermal(g, 60.5, {10.0, {1, 1, 1}});
  Eigen::Matrix2d expect = 605.0 * Eigen::Matrix2d::Identity();
  CHECK((res.k_hom - expect).cwiseAbs().maxCoeff() < 1e-9 * 605.0);
  CHECK((res.per_thickness - 60.5 * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <
        1e-9 * 60.5);
  CHECK(res.solver_residuals.size() == 2);
  CHECK(res.solver_iterations.size() == 2);
}

TEST_CASE("lattice conduction respects symmetry and the mixture bound") {
  LatticeSpec spec;
  spec.family = LatticeFamily::primitive;
  spec.resolution = 16;
  spec.relative_density = 0.25;
  spec.sheet = true;
  VoxelGrid g = generate_tpms(spec);

  const double k_s = 60.5, h = 10.0;
  SolverOptions opts;
  opts.tol = 1e-8;
  ConductionResult res = homogenize_thermal(g, k_s, {h, {1, 1, 1}}, opts);

  CHECK(res.k_hom(0, 0) > 0.0);
  CHECK(res.k_hom(1, 1) > 0.0);
  // Volume-average (parallel) bound on the thickness-integrated conductance.
  double voigt = g.solid_fraction() * k_s * h;
  CHECK(res.k_hom(0, 0) < voigt + 1e-9);
  CHECK(res.k_hom(1, 1) < voigt + 1e-9);
  // The cell is x-y symmetric, so the two diagonals coincide and the
  // off-diagonal coupling vanishes to solver accuracy.
  CHECK(res.k_hom(0, 0) == doctest::Approx(res.k_hom(1, 1)).epsilon(1e-5));
  CHECK(std::abs(res.k_hom(0, 1)) < 1e-5 * res.k_hom(0, 0));
  CHECK((res.k_hom - res.k_hom.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conductance is exactly linear in a power-of-two k_s scale") {
  VoxelGrid g = full_solid(3, 3, 2);
  ConductionResult r1 = homogenize_thermal(g, 1.5, {6.0, {1, 1, 1}});
  ConductionResult r2 = homogenize_thermal(g, 3.0, {6.0, {1, 1, 1}});
  CHECK((r2.k_hom - 2.0 * r1.k_hom).cwiseAbs().maxCoeff() == 0.0);
}
