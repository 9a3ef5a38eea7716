#pragma once

#include "homog/plate_homog.hpp"
#include "homog/thermal_homog.hpp"
#include "homog/volume_homog.hpp"

#include <Eigen/Dense>
#include <string>

namespace homog {

// Every emitter uses a fixed key order and formats floats with 17 significant
// digits, so equal inputs serialize to identical bytes and values round-trip
// exactly.
std::string format_number(double v);

std::string json_matrix(const Eigen::MatrixXd& m);
std::string csv_matrix(const Eigen::MatrixXd& m);

struct PlateMeta {
  int resolution = 0;
  double density_achieved = 0.0;
  double wall_time_s = 0.0;
};

std::string plate_json(const PlateResult& result, const PlateMeta& meta);
std::string volume_json(const ElasticTensor6& c_h, const ReducedStiffness3& q,
                        const AbdMatrix& abd);
std::string thermal_json(const ConductionResult& result);
// Entrywise (volume - plate) / plate where |plate| exceeds
// 1e-6 * max|plate| entry; masked entries report 0.
std::string compare_json(const Matrix6& plate_abd, const Matrix6& volume_abd);

// Parse and re-emit in canonical form. Output produced by the emitters above
// is a fixed point of this function.
std::string canonicalize_json_text(const std::string& text);

}  // namespace homog
