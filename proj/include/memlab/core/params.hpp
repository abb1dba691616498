#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "memlab/core/types.hpp"

namespace memlab {

enum class ReparamKind { Direct, NegExp, NegSoftplus };

const char* to_string(ReparamKind kind) noexcept;
ReparamKind reparam_from_string(const std::string& name);

/// g(z) for the stable reparameterizations; identity for Direct.
Scalar reparam_value(ReparamKind kind, Scalar z) noexcept;
/// g'(z).
Scalar reparam_derivative(ReparamKind kind, Scalar z) noexcept;
/// Pre-image z with g(z) = w (w < 0 required for the negative maps).
Scalar reparam_inverse(ReparamKind kind, Scalar w);

/// Weights theta = (W, U, b, c) of one RNN functional. For a reparameterized
/// model the recurrent matrix is diag(g(M)) and is rebuilt whenever M changes;
/// it cannot be set independently.
class RnnParams {
 public:
  RnnParams() = default;
  RnnParams(Matrix W, Matrix U, Vector b, Vector c);
  static RnnParams reparameterized(ReparamKind kind, Vector M, Matrix U, Vector b, Vector c);
  static RnnParams zeros(std::size_t m, std::size_t d, ReparamKind kind = ReparamKind::Direct);

  std::size_t m() const noexcept { return static_cast<std::size_t>(c.size()); }
  std::size_t d() const noexcept { return static_cast<std::size_t>(U.cols()); }
  ReparamKind reparam() const noexcept { return kind_; }
  bool is_reparameterized() const noexcept { return kind_ != ReparamKind::Direct; }

  const Matrix& W() const noexcept { return W_; }
  const Vector& M() const;
  void set_W(Matrix W);
  void set_M(Vector M);

  /// Throws DomainError on inconsistent shapes or non-finite entries.
  void validate() const;

  Matrix U;
  Vector b;
  Vector c;

 private:
  ReparamKind kind_ = ReparamKind::Direct;
  Matrix W_;
  std::optional<Vector> M_;
};

}  // namespace memlab
