#include "memlab/core/activation.hpp"

#include <cmath>

#include "memlab/core/errors.hpp"

namespace memlab {

Activation Activation::linear(Scalar slope) {
  Activation a;
  a.tag = ActivationTag::Linear;
  a.c_sigma = slope;
  a.a = slope;
  a.b = 0.0;
  return a;
}

Activation Activation::tanh() { return Activation{}; }

Activation Activation::hardtanh() {
  Activation a;
  a.tag = ActivationTag::Hardtanh;
  a.c_sigma = 1.0;
  a.a = 1.0;
  a.b = 0.0;
  a.Z0 = 1.0;
  return a;
}

Activation Activation::relu() {
  Activation a;
  a.tag = ActivationTag::ReLU;
  a.c_sigma = 1.0;
  a.a = 1.0;
  a.b = 0.0;
  a.Z0 = 0.0;  // kink at the origin: neither family applies
  return a;
}

Activation Activation::sigmoid() {
  Activation a;
  a.tag = ActivationTag::Sigmoid;
  a.c_sigma = 0.25;
  a.a = 0.0;
  a.b = 0.0;
  a.Z0 = 0.0;  // sigma(0) != 0
  return a;
}

Activation Activation::from_string(const std::string& name) {
  if (name == "linear") return linear();
  if (name == "tanh") return tanh();
  if (name == "hardtanh") return hardtanh();
  if (name == "relu") return relu();
  if (name == "sigmoid") return sigmoid();
  throw DomainError("unknown activation: " + name);
}

const char* to_string(ActivationTag tag) noexcept {
  switch (tag) {
    case ActivationTag::Linear: return "linear";
    case ActivationTag::Tanh: return "tanh";
    case ActivationTag::Hardtanh: return "hardtanh";
    case ActivationTag::ReLU: return "relu";
    case ActivationTag::Sigmoid: return "sigmoid";
  }
  return "?";
}

bool Activation::locally_linear() const noexcept {
  return tag == ActivationTag::Linear || tag == ActivationTag::Hardtanh;
}

bool Activation::locally_tanh_like() const noexcept {
  return tag == ActivationTag::Tanh || tag == ActivationTag::Linear || tag == ActivationTag::Hardtanh;
}

Scalar Activation::value(Scalar z) const noexcept {
  switch (tag) {
    case ActivationTag::Linear: return c_sigma * z;
    case ActivationTag::Tanh: return std::tanh(z);
    case ActivationTag::Hardtanh: return z > 1.0 ? 1.0 : (z < -1.0 ? -1.0 : z);
    case ActivationTag::ReLU: return z > 0.0 ? z : 0.0;
    case ActivationTag::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
  }
  return 0.0;
}

Scalar Activation::derivative(Scalar z) const noexcept {
  switch (tag) {
    case ActivationTag::Linear: return c_sigma;
    case ActivationTag::Tanh: {
      const Scalar t = std::tanh(z);
      return 1.0 - t * t;
    }
    case ActivationTag::Hardtanh: return (z > -1.0 && z < 1.0) ? 1.0 : 0.0;
    case ActivationTag::ReLU: return z > 0.0 ? 1.0 : 0.0;
    case ActivationTag::Sigmoid: {
      const Scalar s = 1.0 / (1.0 + std::exp(-z));
      return s * (1.0 - s);
    }
  }
  return 0.0;
}

std::pair<Vector, Vector> eval_activation(const Activation& act, const Vector& z) {
  Vector value = apply_activation(act, z);
  Vector deriv(z.size());
  if (act.tag == ActivationTag::Tanh)
    deriv = (1.0 - value.array().square()).matrix();
  else
    deriv = apply_derivative(act, z);
  return {std::move(value), std::move(deriv)};
}

}  // namespace memlab
