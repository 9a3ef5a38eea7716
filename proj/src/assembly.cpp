#include "homog/assembly.hpp"

#include <stdexcept>

namespace homog {

Matrix6 MacroLoadSet::matrix_for(std::size_t e) const {
  Matrix6 m = Matrix6::Zero();
  if (mode == Mode::unit) {
    m.setIdentity();
    return m;
  }
  const double ze = z[e];
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(5, 2) = 1.0;
  m(0, 3) = ze;
  m(1, 4) = ze;
  m(5, 5) = ze;
  return m;
}

MacroLoadSet build_macro_loads(const DofMap& map) {
  MacroLoadSet loads;
  loads.mode = MacroLoadSet::Mode::plate;
  loads.z = map.z_active;
  loads.n_elements = map.n_active;
  return loads;
}

MacroLoadSet build_unit_strain_loads(std::size_t n_elements) {
  MacroLoadSet loads;
  loads.mode = MacroLoadSet::Mode::unit;
  loads.n_elements = n_elements;
  return loads;
}

CsrMatrix assemble_stiffness(const ElementKinematics& kin, const MaterialField& field,
                             const DofMap& map) {
  if (!field.is_homogeneous() && field.element_count() != map.n_active) {
    throw std::invalid_argument("material field does not match active element count");
  }
  using RowMatrix24 = Eigen::Matrix<double, 24, 24, Eigen::RowMajor>;
  if (field.is_homogeneous()) {
    const RowMatrix24 ke = kin.ke;
    const double* data = ke.data();
    return assemble_from_elements(map.edof.data(), map.n_active, 24, map.total_dofs,
                                  [data](std::size_t) { return data; });
  }
  RowMatrix24 ke;
  auto values = [&](std::size_t e) {
    ke.setZero();
    const auto& c = field.tensor(e);
    for (int g = 0; g < 8; ++g) {
      ke.noalias() += kin.bs[g].transpose() * c * kin.bs[g] * kin.det_j;
    }
    return ke.data();
  };
  return assemble_from_elements(map.edof.data(), map.n_active, 24, map.total_dofs, values);
}

RowMatrixXd assemble_loads(const ElementKinematics& kin, const MaterialField& field,
                           const DofMap& map, const MacroLoadSet& loads) {
  if (loads.n_elements != map.n_active) {
    throw std::invalid_argument("load set does not match active element count");
  }
  RowMatrixXd f = RowMatrixXd::Zero(map.total_dofs, 6);
  Eigen::Matrix<double, 24, 6> bt_sum = Eigen::Matrix<double, 24, 6>::Zero();
  for (int g = 0; g < 8; ++g) bt_sum += kin.bs[g].transpose() * kin.det_j;
  for (std::size_t e = 0; e < map.n_active; ++e) {
    const Matrix6 ce = field.tensor(e) * loads.matrix_for(e);
    const Eigen::Matrix<double, 24, 6> fe = bt_sum * ce;
    const std::int32_t* dofs = map.element(e);
    for (int i = 0; i < 24; ++i) f.row(dofs[i]) += fe.row(i);
  }
  return f;
}

std::vector<std::int32_t> restrained_active_dofs(const DofMap& map, int n_anchors) {
  std::vector<std::uint8_t> used(std::size_t(map.total_dofs), 0);
  for (std::int32_t dof : map.edof) used[std::size_t(dof)] = 1;
  std::vector<std::int32_t> active;
  for (std::int64_t d = 0; d < map.total_dofs; ++d) {
    if (used[std::size_t(d)]) active.push_back(std::int32_t(d));
  }
  if (std::int64_t(active.size()) <= n_anchors) {
    throw std::invalid_argument("not enough DOFs to anchor rigid motion");
  }
  active.erase(active.begin(), active.begin() + n_anchors);
  return active;
}

GlobalSystem build_global_system(const ElementKinematics& kin, const MaterialField& field,
                                 const DofMap& map, const MacroLoadSet& loads) {
  GlobalSystem sys;
  sys.k = assemble_stiffness(kin, field, map);
  sys.f = assemble_loads(kin, field, map, loads);
  sys.active_dofs = restrained_active_dofs(map);
  return sys;
}

}  // namespace homog
