#pragma once

#include <string>
#include <vector>

#include "memlab/core/types.hpp"

namespace memlab {

enum class KernelFamily { ExpDecay, PolyDecay, Tabulated };

const char* to_string(KernelFamily f) noexcept;

/// Riesz density rho(t) = weights * phi(t) of a linear functional, with a
/// scalar profile phi from one of the families:
///   ExpDecay(gamma):  phi(t) = gamma^t,        0 < gamma < 1
///   PolyDecay(p):     phi(t) = (t + 1)^(-p),   p > 1
///   Tabulated:        linear interpolation of (t_i, phi_i), zero past the last row.
class MemoryKernel {
 public:
  static MemoryKernel exp_decay(Scalar gamma, Vector weights = Vector::Ones(1));
  static MemoryKernel poly_decay(Scalar p, Vector weights = Vector::Ones(1));
  static MemoryKernel tabulated(std::vector<Scalar> t, std::vector<Scalar> phi, Vector weights = Vector::Ones(1));
  /// Two-column CSV (t, rho). A header row is skipped if it does not parse.
  static MemoryKernel load_csv(const std::string& path, Vector weights = Vector::Ones(1));

  KernelFamily family() const noexcept { return family_; }
  Scalar parameter() const noexcept { return param_; }
  const Vector& weights() const noexcept { return weights_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(weights_.size()); }
  std::string describe() const;

  /// phi(s); zero for s < 0.
  Scalar profile(Scalar s) const noexcept;
  /// R(s) = int_0^s phi; closed form for the analytic families, exact
  /// integral of the interpolant for tables.
  Scalar profile_integral(Scalar s) const noexcept;
  /// int_0^inf phi.
  Scalar total_integral() const noexcept;
  /// int_T^inf phi.
  Scalar tail_integral(Scalar T) const noexcept;
  /// Smallest T with tail_integral(T) <= tol (infinite if unbounded).
  Scalar tail_horizon(Scalar tol) const;

  Vector operator()(Scalar t) const { return weights_ * profile(t); }

 private:
  KernelFamily family_ = KernelFamily::ExpDecay;
  Scalar param_ = 0.9;
  Vector weights_ = Vector::Ones(1);
  std::vector<Scalar> t_;
  std::vector<Scalar> phi_;
  std::vector<Scalar> cum_;
};

}  // namespace memlab
