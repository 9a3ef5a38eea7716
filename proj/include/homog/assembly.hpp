#pragma once

#include "homog/dof_map.hpp"
#include "homog/element.hpp"
#include "homog/material.hpp"
#include "homog/sparse.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace homog {

using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Macro strain programme, one 6x6 matrix per active element whose column j is
// the imposed strain of load case j.
//   plate: columns 0..2 are unit membrane strains [e11, e22, g12], columns
//          3..5 the same scaled by the element-center z (unit curvatures).
//   unit:  identity, the six unit Voigt strains of volume homogenization.
struct MacroLoadSet {
  enum class Mode { plate, unit };
  Mode mode = Mode::plate;
  std::vector<double> z;  // per active element; unused in unit mode
  std::size_t n_elements = 0;

  Matrix6 matrix_for(std::size_t e) const;
};

MacroLoadSet build_macro_loads(const DofMap& map);          // plate mode
MacroLoadSet build_unit_strain_loads(std::size_t n_elements);  // unit mode

struct GlobalSystem {
  CsrMatrix k;
  RowMatrixXd f;                          // total_dofs x n_cases
  std::vector<std::int32_t> active_dofs;  // ascending, anchors removed
};

// K = sum of element stiffness congruences. Heterogeneous fields rebuild the
// element matrix from the shared B operators per element.
CsrMatrix assemble_stiffness(const ElementKinematics& kin, const MaterialField& field,
                             const DofMap& map);

// F[edof[e], :] += sum_g B_g^T (C_e E_e) det_j, the equilibrating load of the
// imposed macro strains.
RowMatrixXd assemble_loads(const ElementKinematics& kin, const MaterialField& field,
                           const DofMap& map, const MacroLoadSet& loads);

// DOFs referenced by any element, ascending, with the n_anchors smallest
// removed to pin rigid translation.
std::vector<std::int32_t> restrained_active_dofs(const DofMap& map, int n_anchors = 3);

GlobalSystem build_global_system(const ElementKinematics& kin, const MaterialField& field,
                                 const DofMap& map, const MacroLoadSet& loads);

}  // namespace homog
