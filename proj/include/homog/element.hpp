#pragma once

#include "homog/material.hpp"

#include <Eigen/Dense>
#include <array>

namespace homog {

using Matrix24 = Eigen::Matrix<double, 24, 24>;
using StrainMatrix = Eigen::Matrix<double, 6, 24>;   // Voigt strain from nodal displacements
using GradMatrix = Eigen::Matrix<double, 3, 8>;      // shape function gradients

// Trilinear hexahedron on an axis-aligned box of size dx x dy x dz.
// Node order: (-,-,-) (+,-,-) (+,+,-) (-,+,-) then the same square at +z.
// One 2x2x2 Gauss point sits at each node position scaled by 1/sqrt(3);
// bs[g] and grad_ns[g] follow the node order.
struct ElementKinematics {
  Matrix24 ke = Matrix24::Zero();
  std::array<StrainMatrix, 8> bs{};
  std::array<GradMatrix, 8> grad_ns{};
  double det_j = 0.0;
};

// Gradients of the 8 shape functions at natural coordinates q in [-1,1]^3,
// already mapped to physical space (row i is d/dx_i).
GradMatrix shape_gradients(const std::array<double, 3>& q, double dx, double dy, double dz);

// Full Gauss integration of B^T C B. Displacement columns are interleaved
// (u1, v1, w1, u2, ...); shear rows of B use engineering strain.
ElementKinematics element_stiffness(const ElasticTensor6& c, double dx, double dy, double dz);

}  // namespace homog
