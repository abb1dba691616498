#include "memlab/targets/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "memlab/core/errors.hpp"

namespace memlab {

const char* to_string(KernelFamily f) noexcept {
  switch (f) {
    case KernelFamily::ExpDecay: return "exp_decay";
    case KernelFamily::PolyDecay: return "poly_decay";
    case KernelFamily::Tabulated: return "tabulated";
  }
  return "?";
}

MemoryKernel MemoryKernel::exp_decay(Scalar gamma, Vector weights) {
  if (!(gamma > 0 && gamma < 1)) throw DomainError("ExpDecay needs 0 < gamma < 1");
  MemoryKernel k;
  k.family_ = KernelFamily::ExpDecay;
  k.param_ = gamma;
  k.weights_ = std::move(weights);
  return k;
}

MemoryKernel MemoryKernel::poly_decay(Scalar p, Vector weights) {
  if (!(p > 1) || !std::isfinite(p)) throw DomainError("PolyDecay needs p > 1");
  MemoryKernel k;
  k.family_ = KernelFamily::PolyDecay;
  k.param_ = p;
  k.weights_ = std::move(weights);
  return k;
}

MemoryKernel MemoryKernel::tabulated(std::vector<Scalar> t, std::vector<Scalar> phi, Vector weights) {
  if (t.size() != phi.size() || t.empty()) throw DomainError("tabulated kernel needs matching, non-empty columns");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i]) || !std::isfinite(phi[i])) throw DomainError("tabulated kernel has non-finite rows");
    if (t[i] < 0 || (i > 0 && !(t[i] > t[i - 1])))
      throw DomainError("tabulated kernel times must be nonnegative and increasing");
  }
  MemoryKernel k;
  k.family_ = KernelFamily::Tabulated;
  k.param_ = 0;
  k.weights_ = std::move(weights);
  k.cum_.assign(t.size(), 0.0);
  // Rows start at t[0]; phi is held at phi[0] on [0, t[0]).
  k.cum_[0] = t[0] * phi[0];
  for (std::size_t i = 1; i < t.size(); ++i) k.cum_[i] = k.cum_[i - 1] + 0.5 * (phi[i] + phi[i - 1]) * (t[i] - t[i - 1]);
  k.t_ = std::move(t);
  k.phi_ = std::move(phi);
  return k;
}

MemoryKernel MemoryKernel::load_csv(const std::string& path, Vector weights) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open kernel table " + path);
  std::vector<Scalar> t, phi;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    Scalar a, b;
    if (!(ss >> a >> b)) {
      if (lineno == 1) continue;
      throw DomainError("malformed kernel table row " + std::to_string(lineno) + " in " + path);
    }
    t.push_back(a);
    phi.push_back(b);
  }
  return tabulated(std::move(t), std::move(phi), std::move(weights));
}

std::string MemoryKernel::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (family_) {
    case KernelFamily::ExpDecay: os << "exp_decay(gamma=" << param_ << ")"; break;
    case KernelFamily::PolyDecay: os << "poly_decay(p=" << param_ << ")"; break;
    case KernelFamily::Tabulated: os << "tabulated(rows=" << t_.size() << ")"; break;
  }
  return os.str();
}

Scalar MemoryKernel::profile(Scalar s) const noexcept {
  if (s < 0) return 0;
  switch (family_) {
    case KernelFamily::ExpDecay: return std::pow(param_, s);
    case KernelFamily::PolyDecay: return std::pow(s + 1, -param_);
    case KernelFamily::Tabulated: {
      if (s <= t_.front()) return phi_.front();
      if (s > t_.back()) return 0;
      const auto it = std::upper_bound(t_.begin(), t_.end(), s);
      const std::size_t i = static_cast<std::size_t>(it - t_.begin());
      if (i >= t_.size()) return phi_.back();
      const Scalar u = (s - t_[i - 1]) / (t_[i] - t_[i - 1]);
      return phi_[i - 1] + u * (phi_[i] - phi_[i - 1]);
    }
  }
  return 0;
}

Scalar MemoryKernel::profile_integral(Scalar s) const noexcept {
  if (s <= 0) return 0;
  switch (family_) {
    case KernelFamily::ExpDecay: return -std::expm1(s * std::log(param_)) / -std::log(param_);
    case KernelFamily::PolyDecay: return -std::expm1((1 - param_) * std::log1p(s)) / (param_ - 1);
    case KernelFamily::Tabulated: {
      if (s <= t_.front()) return s * phi_.front();
      if (s >= t_.back()) return cum_.back();
      const auto it = std::upper_bound(t_.begin(), t_.end(), s);
      const std::size_t i = static_cast<std::size_t>(it - t_.begin());
      return cum_[i - 1] + 0.5 * (phi_[i - 1] + profile(s)) * (s - t_[i - 1]);
    }
  }
  return 0;
}

Scalar MemoryKernel::total_integral() const noexcept {
  switch (family_) {
    case KernelFamily::ExpDecay: return 1 / -std::log(param_);
    case KernelFamily::PolyDecay: return 1 / (param_ - 1);
    case KernelFamily::Tabulated: return cum_.back();
  }
  return 0;
}

Scalar MemoryKernel::tail_integral(Scalar T) const noexcept {
  if (T <= 0) return total_integral();
  switch (family_) {
    case KernelFamily::ExpDecay: return std::pow(param_, T) / -std::log(param_);
    case KernelFamily::PolyDecay: return std::pow(T + 1, 1 - param_) / (param_ - 1);
    case KernelFamily::Tabulated: return cum_.back() - profile_integral(T);
  }
  return 0;
}

Scalar MemoryKernel::tail_horizon(Scalar tol) const {
  if (!(tol > 0)) throw DomainError("tail_horizon: tolerance must be positive");
  switch (family_) {
    case KernelFamily::ExpDecay: {
      const Scalar lam = -std::log(param_);
      return std::max<Scalar>(0, std::log(1 / (tol * lam)) / lam);
    }
    case KernelFamily::PolyDecay:
      return std::max<Scalar>(0, std::pow(tol * (param_ - 1), 1 / (1 - param_)) - 1);
    case KernelFamily::Tabulated: return t_.back();
  }
  return std::numeric_limits<Scalar>::infinity();
}

}  // namespace memlab
