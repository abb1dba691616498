#include "memlab/train/checkpoint.hpp"

#include <vector>

#include <json.hpp>

#include "memlab/core/errors.hpp"

namespace memlab {

using nlohmann::json;

namespace {

json matrix_json(const Matrix& A) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(A(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const Vector& v) { return std::vector<Scalar>(v.data(), v.data() + v.size()); }

Matrix matrix_from(const json& j) {
  const auto r = static_cast<Eigen::Index>(j.size());
  const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  Matrix A(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != c) throw ConfigError("checkpoint: ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) A(i, k) = j.at(i).at(k).get<Scalar>();
  }
  return A;
}

Vector vector_from(const json& j) {
  const auto v = j.get<std::vector<Scalar>>();
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

std::string params_to_json(const RnnParams& theta) {
  json j{{"schema_version", 1},
         {"reparam", to_string(theta.reparam())},
         {"m", theta.m()},
         {"d", theta.d()},
         {"W", matrix_json(theta.W())},
         {"U", matrix_json(theta.U)},
         {"b", vector_json(theta.b)},
         {"c", vector_json(theta.c)}};
  if (theta.is_reparameterized()) j["M"] = vector_json(theta.M());
  return j.dump(2);
}

RnnParams params_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const ReparamKind kind = reparam_from_string(j.at("reparam").get<std::string>());
    Matrix U = matrix_from(j.at("U"));
    Vector b = vector_from(j.at("b"));
    Vector c = vector_from(j.at("c"));
    if (kind == ReparamKind::Direct) return RnnParams(matrix_from(j.at("W")), std::move(U), std::move(b), std::move(c));
    return RnnParams::reparameterized(kind, vector_from(j.at("M")), std::move(U), std::move(b), std::move(c));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("checkpoint: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("checkpoint: ") + e.what());
  }
}

}  // namespace memlab
