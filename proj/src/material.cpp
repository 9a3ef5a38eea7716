#include "homog/material.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace homog {

ElasticTensor6 isotropic_elasticity(double E, double nu) {
  if (!(E > 0.0)) {
    throw std::invalid_argument("invalid Young's modulus " + std::to_string(E) +
                                ": must be positive");
  }
  if (!(nu > -1.0 && nu < 0.5)) {
    throw std::invalid_argument("invalid Poisson ratio " + std::to_string(nu) +
                                ": must lie in (-1, 0.5)");
  }
  const double lambda = nu * E / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const double mu = E / (2.0 * (1.0 + nu));
  ElasticTensor6 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t.c(i, j) = lambda;
    }
    t.c(i, i) = lambda + 2.0 * mu;
    t.c(i + 3, i + 3) = mu;
  }
  return t;
}

MaterialField MaterialField::homogeneous(const ElasticTensor6& tensor) {
  MaterialField f;
  f.homogeneous_ = true;
  f.tensors_ = {tensor};
  return f;
}

MaterialField MaterialField::per_element(std::vector<ElasticTensor6> tensors) {
  if (tensors.empty()) {
    throw std::invalid_argument("per-element material field must not be empty");
  }
  MaterialField f;
  f.homogeneous_ = false;
  f.tensors_ = std::move(tensors);
  return f;
}

MaterialField multi_material_field(const std::vector<std::uint8_t>& element_ids,
                                   const std::map<int, IsotropicMaterial>& table) {
  std::map<int, ElasticTensor6> cache;
  std::vector<ElasticTensor6> tensors;
  tensors.reserve(element_ids.size());
  for (std::uint8_t id : element_ids) {
    auto cached = cache.find(id);
    if (cached == cache.end()) {
      auto entry = table.find(id);
      if (entry == table.end()) {
        throw std::invalid_argument("unmapped material ID " + std::to_string(int(id)));
      }
      cached = cache.emplace(id, isotropic_elasticity(entry->second.E, entry->second.nu)).first;
    }
    tensors.push_back(cached->second);
  }
  return MaterialField::per_element(std::move(tensors));
}

std::map<int, IsotropicMaterial> parse_material_table(const std::string& json_text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("material table is not valid JSON: ") + err.what());
  }
  if (!parsed.is_object()) {
    throw std::invalid_argument("material table must be a JSON object keyed by material ID");
  }
  std::map<int, IsotropicMaterial> table;
  for (const auto& [key, value] : parsed.items()) {
    int id = 0;
    try {
      id = std::stoi(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("material table key '" + key + "' is not an integer ID");
    }
    if (!value.is_object() || !value.contains("E") || !value.contains("nu")) {
      throw std::invalid_argument("material table entry '" + key +
                                  "' must be an object with E and nu");
    }
    table[id] = IsotropicMaterial{value.at("E").get<double>(), value.at("nu").get<double>()};
  }
  if (table.empty()) {
    throw std::invalid_argument("material table is empty");
  }
  return table;
}

}  // namespace homog
