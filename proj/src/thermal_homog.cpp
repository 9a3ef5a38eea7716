#include "homog/thermal_homog.hpp"

#include "homog/assembly.hpp"
#include "homog/dof_map.hpp"
#include "homog/sparse.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {

ThermalElement thermal_element(double k_s, double dx, double dy, double dz) {
  if (!(k_s > 0.0)) throw std::invalid_argument("conductivity must be positive");
  ThermalElement t;
  t.det_j = dx * dy * dz / 8.0;
  const double s = 1.0 / std::sqrt(3.0);
  constexpr int kSigns[8][3] = {
      {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
      {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1},
  };
  for (int g = 0; g < 8; ++g) {
    const std::array<double, 3> q = {kSigns[g][0] * s, kSigns[g][1] * s, kSigns[g][2] * s};
    t.grad_ns[g] = shape_gradients(q, dx, dy, dz);
    t.kt.noalias() += t.grad_ns[g].transpose() * (k_s * t.grad_ns[g]) * t.det_j;
  }
  return t;
}

ConductionResult homogenize_thermal(const VoxelGrid& grid, double k_s, const PlateGeometry& geom,
                                    const SolverOptions& opts) {
  const auto res = geom.resolve(grid);
  const ThermalElement elem = thermal_element(k_s, res.dx, res.dy, res.dz);
  const ScalarDofMap map = build_scalar_dof_map(grid, Periodicity::in_plane);

  using RowMatrix8 = Eigen::Matrix<double, 8, 8, Eigen::RowMajor>;
  const RowMatrix8 kt = elem.kt;
  const double* kt_data = kt.data();
  GlobalSystem sys;
  sys.k = assemble_from_elements(map.edof.data(), map.n_active, 8, map.total_dofs,
                                 [kt_data](std::size_t) { return kt_data; });

  // Unit macroscopic gradients along x and y.
  Eigen::Matrix<double, 3, 2> grad_macro = Eigen::Matrix<double, 3, 2>::Zero();
  grad_macro(0, 0) = 1.0;
  grad_macro(1, 1) = 1.0;
  Eigen::Matrix<double, 8, 2> fe = Eigen::Matrix<double, 8, 2>::Zero();
  for (int g = 0; g < 8; ++g) {
    fe.noalias() += elem.grad_ns[g].transpose() * (k_s * grad_macro) * elem.det_j;
  }
  sys.f = RowMatrixXd::Zero(map.total_dofs, 2);
  for (std::size_t e = 0; e < map.n_active; ++e) {
    const std::int32_t* dofs = map.element(e);
    for (int i = 0; i < 8; ++i) sys.f.row(dofs[i]) += fe.row(i);
  }

  // One anchored temperature DOF pins the constant mode.
  {
    std::vector<std::uint8_t> used(std::size_t(map.total_dofs), 0);
    for (std::int32_t dof : map.edof) used[std::size_t(dof)] = 1;
    for (std::int64_t d = 0; d < map.total_dofs; ++d) {
      if (used[std::size_t(d)]) sys.active_dofs.push_back(std::int32_t(d));
    }
    if (sys.active_dofs.size() < 2) {
      throw std::invalid_argument("not enough DOFs to anchor the temperature field");
    }
    sys.active_dofs.erase(sys.active_dofs.begin());
  }

  const SolveResult sol = solve_multi_rhs(sys, opts);

  Eigen::Matrix2d k_hom = Eigen::Matrix2d::Zero();
  const double w = elem.det_j / res.area;
  Eigen::Matrix<double, 8, 2> te;
  for (std::size_t e = 0; e < map.n_active; ++e) {
    const std::int32_t* dofs = map.element(e);
    for (int i = 0; i < 8; ++i) te.row(i) = sol.u.row(dofs[i]);
    for (int g = 0; g < 8; ++g) {
      const Eigen::Matrix<double, 3, 2> flux = k_s * (grad_macro - elem.grad_ns[g] * te);
      k_hom += flux.topRows<2>() * w;
    }
  }

  ConductionResult out;
  out.k_hom = 0.5 * (k_hom + k_hom.transpose());
  out.per_thickness = out.k_hom / geom.thickness;
  out.solver_residuals = sol.residuals;
  out.solver_iterations = sol.iterations;
  return out;
}

}  // namespace homog
