#include "homog/element.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <array>

namespace {

// Physical corner coordinates of a dx x dy x dz element in node order.
std::array<std::array<double, 3>, 8> corners(double dx, double dy, double dz) {
  return {{{0, 0, 0},
           {dx, 0, 0},
           {dx, dy, 0},
           {0, dy, 0},
           {0, 0, dz},
           {dx, 0, dz},
           {dx, dy, dz},
           {0, dy, dz}}};
}

}  // namespace

TEST_CASE("Jacobian determinant") {
  const auto c = homog::isotropic_elasticity(1.0, 0.3);
  CHECK(homog::element_stiffness(c, 1, 1, 1).det_j == doctest::Approx(0.125));
  CHECK(homog::element_stiffness(c, 2, 3, 4).det_j == doctest::Approx(3.0));
}

TEST_CASE("stiffness is symmetric") {
  const auto kin = homog::element_stiffness(homog::isotropic_elasticity(1215.0, 0.35), 0.1, 0.1, 0.1);
  const double scale = kin.ke.cwiseAbs().maxCoeff();
  CHECK((kin.ke - kin.ke.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale);
}

TEST_CASE("stiffness has exactly six rigid modes") {
  const auto kin = homog::element_stiffness(homog::isotropic_elasticity(1.0, 0.3), 1, 1, 1);
  Eigen::SelfAdjointEigenSolver<homog::Matrix24> eig(kin.ke);
  const auto& ev = eig.eigenvalues();
  const double scale = ev(23);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(ev(i)) <= 1e-12 * scale);
  CHECK(ev(6) > 1e-6 * scale);
}

TEST_CASE("constant strain is reproduced at every Gauss point") {
  const double dx = 0.7, dy = 1.3, dz = 0.4;
  const auto kin = homog::element_stiffness(homog::isotropic_elasticity(1.0, 0.25), dx, dy, dz);
  // u_i = eps_ij x_j for a symmetric eps; B u must equal its Voigt vector
  // (engineering shears) at each Gauss point.
  const double eps[3][3] = {{0.3, 0.05, -0.1}, {0.05, -0.2, 0.15}, {-0.1, 0.15, 0.4}};
  Eigen::Matrix<double, 24, 1> u;
  const auto x = corners(dx, dy, dz);
  for (int a = 0; a < 8; ++a) {
    for (int i = 0; i < 3; ++i) {
      u(3 * a + i) = eps[i][0] * x[a][0] + eps[i][1] * x[a][1] + eps[i][2] * x[a][2];
    }
  }
  Eigen::Matrix<double, 6, 1> expected;
  expected << eps[0][0], eps[1][1], eps[2][2], 2 * eps[1][2], 2 * eps[0][2], 2 * eps[0][1];
  for (int g = 0; g < 8; ++g) {
    const Eigen::Matrix<double, 6, 1> strain = kin.bs[g] * u;
    CHECK((strain - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("shape gradients sum to zero") {
  const auto grad = homog::shape_gradients({0.3, -0.6, 0.9}, 0.5, 0.25, 2.0);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(grad.row(i).sum()) <= 1e-14);
  }
}

TEST_CASE("stiffness is linear in the constitutive tensor") {
  const auto c1 = homog::isotropic_elasticity(1.0, 0.3);
  auto c2 = c1;
  c2.c *= 8.0;
  const auto k1 = homog::element_stiffness(c1, 1, 1, 1);
  const auto k2 = homog::element_stiffness(c2, 1, 1, 1);
  CHECK((k2.ke - 8.0 * k1.ke).cwiseAbs().maxCoeff() <= 1e-12 * k2.ke.cwiseAbs().maxCoeff());
}

TEST_CASE("invalid element dimensions throw") {
  CHECK_THROWS(homog::shape_gradients({0, 0, 0}, 0.0, 1.0, 1.0));
  CHECK_THROWS(homog::element_stiffness(homog::isotropic_elasticity(1.0, 0.3), 1.0, -1.0, 1.0));
}
