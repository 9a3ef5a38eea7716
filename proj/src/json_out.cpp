#include "homog/json_out.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace homog {

namespace {

void append_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
}

void emit(const nlohmann::ordered_json& v, std::string& out) {
  using value_t = nlohmann::ordered_json::value_t;
  switch (v.type()) {
    case value_t::object: {
      out.push_back('{');
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out.push_back(',');
        first = false;
        append_escaped(key, out);
        out.push_back(':');
        emit(value, out);
      }
      out.push_back('}');
      break;
    }
    case value_t::array: {
      out.push_back('[');
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        emit(v[i], out);
      }
      out.push_back(']');
      break;
    }
    case value_t::string: append_escaped(v.get<std::string>(), out); break;
    case value_t::boolean: out += v.get<bool>() ? "true" : "false"; break;
    case value_t::number_integer: out += std::to_string(v.get<std::int64_t>()); break;
    case value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); break;
    case value_t::number_float: out += format_number(v.get<double>()); break;
    case value_t::null: out += "null"; break;
    default: throw std::invalid_argument("unsupported JSON value type");
  }
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in JSON output");
  if (v == 0.0) return "0";  // canonical zero, covers -0
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_matrix(const Eigen::MatrixXd& m) {
  std::string s = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) s.push_back(',');
    s.push_back('[');
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) s.push_back(',');
      s += format_number(m(r, c));
    }
    s.push_back(']');
  }
  s.push_back(']');
  return s;
}

std::string csv_matrix(const Eigen::MatrixXd& m) {
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) s.push_back(',');
      s += format_number(m(r, c));
    }
    s.push_back('\n');
  }
  return s;
}

namespace {

std::string json_vector(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(',');
    s += format_number(v[i]);
  }
  s.push_back(']');
  return s;
}

}  // namespace

std::string plate_json(const PlateResult& result, const PlateMeta& meta) {
  std::string s = "{\"abd\":" + json_matrix(result.abd.m);
  s += ",\"blocks\":{\"A\":" + json_matrix(result.abd.a());
  s += ",\"B\":" + json_matrix(result.abd.b());
  s += ",\"D\":" + json_matrix(result.abd.d()) + "}";
  s += ",\"meta\":{\"resolution\":" + std::to_string(meta.resolution);
  s += ",\"density_achieved\":" + format_number(meta.density_achieved);
  s += ",\"solver_residuals\":" + json_vector(result.solver_residuals);
  s += ",\"wall_time_s\":" + format_number(meta.wall_time_s) + "}}";
  return s;
}

std::string volume_json(const ElasticTensor6& c_h, const ReducedStiffness3& q,
                        const AbdMatrix& abd) {
  std::string s = "{\"C_H\":" + json_matrix(c_h.c);
  s += ",\"Q_H\":" + json_matrix(q.q);
  s += ",\"ABD_analytic\":" + json_matrix(abd.m) + "}";
  return s;
}

std::string thermal_json(const ConductionResult& result) {
  std::string s = "{\"k_hom\":" + json_matrix(result.k_hom);
  s += ",\"k_hom_per_thickness\":" + json_matrix(result.per_thickness) + "}";
  return s;
}

std::string compare_json(const Matrix6& plate_abd, const Matrix6& volume_abd) {
  const double floor = 1e-6 * plate_abd.cwiseAbs().maxCoeff();
  Matrix6 err = Matrix6::Zero();
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (std::abs(plate_abd(r, c)) > floor) {
        err(r, c) = (volume_abd(r, c) - plate_abd(r, c)) / plate_abd(r, c);
      }
    }
  }
  std::string s = "{\"plate_abd\":" + json_matrix(plate_abd);
  s += ",\"volume_abd\":" + json_matrix(volume_abd);
  s += ",\"relative_error\":" + json_matrix(err) + "}";
  return s;
}

std::string canonicalize_json_text(const std::string& text) {
  nlohmann::ordered_json parsed;
  try {
    parsed = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  std::string out;
  emit(parsed, out);
  return out;
}

}  // namespace homog
