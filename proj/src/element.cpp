#include "homog/element.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {

namespace {

constexpr int kNodeSigns[8][3] = {
    {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
    {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1},
};

StrainMatrix strain_matrix(const GradMatrix& grad) {
  StrainMatrix b = StrainMatrix::Zero();
  for (int a = 0; a < 8; ++a) {
    const double gx = grad(0, a);
    const double gy = grad(1, a);
    const double gz = grad(2, a);
    b(0, 3 * a) = gx;
    b(1, 3 * a + 1) = gy;
    b(2, 3 * a + 2) = gz;
    b(3, 3 * a + 1) = gz;
    b(3, 3 * a + 2) = gy;
    b(4, 3 * a) = gz;
    b(4, 3 * a + 2) = gx;
    b(5, 3 * a) = gy;
    b(5, 3 * a + 1) = gx;
  }
  return b;
}

}  // namespace

GradMatrix shape_gradients(const std::array<double, 3>& q, double dx, double dy, double dz) {
  if (!(dx > 0.0 && dy > 0.0 && dz > 0.0)) {
    throw std::invalid_argument("element dimensions must be positive");
  }
  GradMatrix grad;
  for (int a = 0; a < 8; ++a) {
    const double sx = kNodeSigns[a][0];
    const double sy = kNodeSigns[a][1];
    const double sz = kNodeSigns[a][2];
    grad(0, a) = 0.125 * sx * (1.0 + sy * q[1]) * (1.0 + sz * q[2]) * (2.0 / dx);
    grad(1, a) = 0.125 * sy * (1.0 + sx * q[0]) * (1.0 + sz * q[2]) * (2.0 / dy);
    grad(2, a) = 0.125 * sz * (1.0 + sx * q[0]) * (1.0 + sy * q[1]) * (2.0 / dz);
  }
  return grad;
}

ElementKinematics element_stiffness(const ElasticTensor6& c, double dx, double dy, double dz) {
  ElementKinematics kin;
  kin.det_j = dx * dy * dz / 8.0;
  const double s = 1.0 / std::sqrt(3.0);
  for (int g = 0; g < 8; ++g) {
    const std::array<double, 3> q = {kNodeSigns[g][0] * s, kNodeSigns[g][1] * s,
                                     kNodeSigns[g][2] * s};
    kin.grad_ns[g] = shape_gradients(q, dx, dy, dz);
    kin.bs[g] = strain_matrix(kin.grad_ns[g]);
    kin.ke.noalias() += kin.bs[g].transpose() * c.c * kin.bs[g] * kin.det_j;
  }
  return kin;
}

}  // namespace homog
