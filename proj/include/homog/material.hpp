#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

namespace homog {

using Matrix6 = Eigen::Matrix<double, 6, 6>;

// Constitutive tensor in Voigt order [e11, e22, e33, g23, g13, g12] with
// engineering shear strains. Symmetric by construction.
struct ElasticTensor6 {
  Matrix6 c = Matrix6::Zero();
};

struct IsotropicMaterial {
  double E = 0.0;
  double nu = 0.0;
};

// Lame form: upper-left 3x3 block is lambda with lambda+2mu on the diagonal,
// lower-right 3x3 block is mu*I.
ElasticTensor6 isotropic_elasticity(double E, double nu);

// Either one shared tensor or one tensor per active element.
class MaterialField {
public:
  static MaterialField homogeneous(const ElasticTensor6& tensor);
  static MaterialField per_element(std::vector<ElasticTensor6> tensors);

  bool is_homogeneous() const { return homogeneous_; }
  // Heterogeneous field length; 0 for the homogeneous case.
  std::size_t element_count() const { return homogeneous_ ? 0 : tensors_.size(); }

  const Matrix6& tensor(std::size_t element) const {
    return homogeneous_ ? tensors_[0].c : tensors_[element].c;
  }

private:
  MaterialField() = default;
  bool homogeneous_ = true;
  std::vector<ElasticTensor6> tensors_;
};

// Maps per-active-element material IDs through an ID -> material table.
// Every ID must be mapped; there is no default material.
MaterialField multi_material_field(const std::vector<std::uint8_t>& element_ids,
                                   const std::map<int, IsotropicMaterial>& table);

// Parses {"1": {"E": 1215.0, "nu": 0.35}, ...}.
std::map<int, IsotropicMaterial> parse_material_table(const std::string& json_text);

}  // namespace homog
