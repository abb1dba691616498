#include "memlab/core/signal.hpp"

#include <cmath>
#include <cstring>
#include <utility>

#include "memlab/core/errors.hpp"

namespace memlab {

const char* to_string(SignalKind kind) noexcept {
  switch (kind) {
    case SignalKind::Heaviside: return "heaviside";
    case SignalKind::Impulse: return "impulse";
    case SignalKind::Reversed: return "reversed";
    case SignalKind::Arbitrary: return "arbitrary";
  }
  return "?";
}

const char* to_string(ProbeKind kind) noexcept {
  switch (kind) {
    case ProbeKind::Heaviside: return "heaviside";
    case ProbeKind::Impulse: return "impulse";
    case ProbeKind::Reversed: return "reversed";
  }
  return "?";
}

ProbeKind probe_kind_from_string(const char* name) {
  if (std::strcmp(name, "heaviside") == 0) return ProbeKind::Heaviside;
  if (std::strcmp(name, "impulse") == 0) return ProbeKind::Impulse;
  if (std::strcmp(name, "reversed") == 0) return ProbeKind::Reversed;
  throw DomainError(std::string("unknown probe kind: ") + name);
}

Signal::Signal(TimeGrid g, Matrix v, SignalKind k) : grid(g), values(std::move(v)), kind(k) {
  if (static_cast<std::size_t>(values.cols()) != grid.size())
    throw DomainError("signal length does not match its grid");
}

Vector Signal::sample(Scalar t) const {
  const Scalar s = (t - grid.t_start()) / grid.dt();
  if (s < -1e-9) return Vector::Zero(values.rows());
  auto k = static_cast<std::size_t>(std::floor(s + 1e-9));
  if (k >= size()) k = size() - 1;
  return values.col(static_cast<Eigen::Index>(k));
}

Scalar Signal::sup_norm() const {
  return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
}

std::size_t Signal::onset() const noexcept {
  if (kind == SignalKind::Heaviside || kind == SignalKind::Impulse) {
    const std::size_t k = grid.first_nonnegative();
    return k < size() ? k : 0;
  }
  return 0;
}

Signal make_probe_signal(ProbeKind kind, const Vector& amplitude, const TimeGrid& grid) {
  if (grid.size() == 0) throw InvalidGrid("probe signal needs a non-empty grid");
  const std::size_t n = grid.size();
  const std::size_t k0 = grid.first_nonnegative();
  Matrix v = Matrix::Zero(amplitude.size(), static_cast<Eigen::Index>(n));
  switch (kind) {
    case ProbeKind::Heaviside:
      for (std::size_t k = k0; k < n; ++k) v.col(static_cast<Eigen::Index>(k)) = amplitude;
      return Signal(grid, std::move(v), SignalKind::Heaviside);
    case ProbeKind::Impulse:
      if (k0 < n) v.col(static_cast<Eigen::Index>(k0)) = amplitude / grid.dt();
      return Signal(grid, std::move(v), SignalKind::Impulse);
    case ProbeKind::Reversed:
      for (std::size_t k = 0; k < k0 && k < n; ++k) v.col(static_cast<Eigen::Index>(k)) = amplitude;
      return Signal(grid, std::move(v), SignalKind::Reversed);
  }
  throw DomainError("unknown probe kind");
}

}  // namespace memlab
