#include "homog/volume_homog.hpp"

#include "homog/assembly.hpp"
#include "homog/dof_map.hpp"
#include "homog/element.hpp"

#include <stdexcept>
#include <string>

namespace homog {

VolumeResult homogenize_volume(const VoxelGrid& grid, const MaterialField& field, double dx,
                               double dy, double dz, const SolverOptions& opts) {
  if (!(dx > 0.0 && dy > 0.0 && dz > 0.0)) {
    throw std::invalid_argument("voxel dimensions must be positive");
  }
  ElasticTensor6 c0;
  c0.c = field.tensor(0);
  const ElementKinematics kin = element_stiffness(c0, dx, dy, dz);
  const DofMap map =
      build_dof_map(grid, dz, double(grid.nz) * dz, Periodicity::full);
  const MacroLoadSet loads = build_unit_strain_loads(map.n_active);
  const GlobalSystem sys = build_global_system(kin, field, map, loads);
  const SolveResult sol = solve_multi_rhs(sys, opts);

  const double volume =
      double(grid.nx) * dx * double(grid.ny) * dy * double(grid.nz) * dz;
  Matrix6 c_h = Matrix6::Zero();
  const double w = kin.det_j / volume;
  Eigen::Matrix<double, 24, 6> ue;
  for (std::size_t e = 0; e < map.n_active; ++e) {
    const std::int32_t* dofs = map.element(e);
    for (int i = 0; i < 24; ++i) ue.row(i) = sol.u.row(dofs[i]);
    for (int g = 0; g < 8; ++g) {
      const Matrix6 e_total = Matrix6::Identity() - kin.bs[g] * ue;
      c_h.noalias() += e_total.transpose() * field.tensor(e) * e_total * w;
    }
  }

  VolumeResult out;
  out.c_h.c = 0.5 * (c_h + c_h.transpose());
  out.solver_residuals = sol.residuals;
  out.solver_iterations = sol.iterations;
  return out;
}

ReducedStiffness3 static_condensation(const ElasticTensor6& c_h) {
  const double c33 = c_h.c(2, 2);
  if (!(c33 > 0.0)) {
    throw std::invalid_argument("degenerate normal stiffness: C33 = " + std::to_string(c33));
  }
  constexpr int kPlane[3] = {0, 1, 5};
  ReducedStiffness3 out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int i = kPlane[a];
      const int j = kPlane[b];
      out.q(a, b) = c_h.c(i, j) - c_h.c(i, 2) * c_h.c(j, 2) / c33;
    }
  }
  return out;
}

AbdMatrix analytic_abd(const ReducedStiffness3& q, double thickness) {
  if (!(thickness > 0.0)) throw std::invalid_argument("thickness must be positive");
  AbdMatrix abd;
  abd.m.topLeftCorner<3, 3>() = q.q * thickness;
  abd.m.bottomRightCorner<3, 3>() = q.q * (thickness * thickness * thickness / 12.0);
  return abd;
}

}  // namespace homog
