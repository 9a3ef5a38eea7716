#include "homog/plate_homog.hpp"

#include "homog/assembly.hpp"
#include "homog/dof_map.hpp"
#include "homog/element.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {

PlateGeometry::Resolved PlateGeometry::resolve(const VoxelGrid& grid) const {
  if (!(thickness > 0.0)) throw std::invalid_argument("plate thickness must be positive");
  if (cells[0] < 1 || cells[1] < 1 || cells[2] < 1) {
    throw std::invalid_argument("cell counts must be at least 1");
  }
  if (grid.nx == 0 || grid.ny == 0 || grid.nz == 0) {
    throw std::invalid_argument("grid has zero extent");
  }
  const double cell = thickness / double(cells[2]);
  Resolved r;
  r.lx = double(cells[0]) * cell;
  r.ly = double(cells[1]) * cell;
  r.lz = thickness;
  r.dx = r.lx / double(grid.nx);
  r.dy = r.ly / double(grid.ny);
  r.dz = r.lz / double(grid.nz);
  r.area = r.lx * r.ly;
  if (std::abs(r.dz * double(grid.nz) - thickness) > 1e-12 * thickness) {
    throw std::invalid_argument("voxel height does not tile the thickness");
  }
  return r;
}

double pre_symmetry_check(const Matrix6& raw) {
  const double scale = raw.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (raw - raw.transpose()).cwiseAbs().maxCoeff() / scale;
}

PlateResult homogenize_plate(const VoxelGrid& grid, const MaterialField& field,
                             const PlateGeometry& geom, const SolverOptions& opts) {
  const auto res = geom.resolve(grid);
  ElasticTensor6 c0;
  c0.c = field.tensor(0);
  const ElementKinematics kin = element_stiffness(c0, res.dx, res.dy, res.dz);
  const DofMap map = build_dof_map(grid, res.dz, geom.thickness, Periodicity::in_plane);
  const MacroLoadSet loads = build_macro_loads(map);
  const GlobalSystem sys = build_global_system(kin, field, map, loads);
  const SolveResult sol = solve_multi_rhs(sys, opts);

  Matrix6 raw = Matrix6::Zero();
  const double w = kin.det_j / res.area;
  Eigen::Matrix<double, 24, 6> ue;
  for (std::size_t e = 0; e < map.n_active; ++e) {
    const std::int32_t* dofs = map.element(e);
    for (int i = 0; i < 24; ++i) ue.row(i) = sol.u.row(dofs[i]);
    const Matrix6 e_macro = loads.matrix_for(e);
    const double ze = map.z_active[e];
    for (int g = 0; g < 8; ++g) {
      const Matrix6 sig = field.tensor(e) * (e_macro - kin.bs[g] * ue);
      for (int c = 0; c < 6; ++c) {
        raw(0, c) += sig(0, c) * w;
        raw(1, c) += sig(1, c) * w;
        raw(2, c) += sig(5, c) * w;
        raw(3, c) += sig(0, c) * ze * w;
        raw(4, c) += sig(1, c) * ze * w;
        raw(5, c) += sig(5, c) * ze * w;
      }
    }
  }

  PlateResult out;
  out.raw = raw;
  out.abd.m = 0.5 * (raw + raw.transpose());
  out.asymmetry = pre_symmetry_check(raw);
  out.density = grid.solid_fraction();
  out.solver_residuals = sol.residuals;
  out.solver_iterations = sol.iterations;
  return out;
}

}  // namespace homog
