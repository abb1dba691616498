#pragma once

#include <limits>
#include <string>
#include <utility>

#include "memlab/core/types.hpp"

namespace memlab {

enum class ActivationTag { Linear, Tanh, Hardtanh, ReLU, Sigmoid };

/// Elementwise recurrent activation. `c_sigma` and `Z0` describe the locally
/// linear family (sigma(z) = c_sigma z for |z| < Z0); `a`, `b` describe the
/// locally tanh-like family (sigma' = a - b sigma^2 for |z| < Z0).
struct Activation {
  ActivationTag tag = ActivationTag::Tanh;
  Scalar c_sigma = 1.0;
  Scalar a = 1.0;
  Scalar b = 1.0;
  Scalar Z0 = std::numeric_limits<Scalar>::infinity();

  static Activation linear(Scalar slope = 1.0);
  static Activation tanh();
  static Activation hardtanh();
  static Activation relu();
  static Activation sigmoid();
  static Activation from_string(const std::string& name);

  bool locally_linear() const noexcept;     // member of the c_sigma z family
  bool locally_tanh_like() const noexcept;  // member of the a - b sigma^2 family

  Scalar value(Scalar z) const noexcept;
  Scalar derivative(Scalar z) const noexcept;

  bool operator==(const Activation&) const = default;
};

const char* to_string(ActivationTag tag) noexcept;

/// Elementwise (value, derivative). The tanh derivative is computed as
/// 1 - value^2.
std::pair<Vector, Vector> eval_activation(const Activation& act, const Vector& z);

template <typename Derived>
Matrix apply_activation(const Activation& act, const Eigen::MatrixBase<Derived>& z) {
  return z.unaryExpr([&act](Scalar v) { return act.value(v); });
}

template <typename Derived>
Matrix apply_derivative(const Activation& act, const Eigen::MatrixBase<Derived>& z) {
  return z.unaryExpr([&act](Scalar v) { return act.derivative(v); });
}

}  // namespace memlab
