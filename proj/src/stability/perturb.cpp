#include "memlab/stability/perturb.hpp"

#include <cmath>
#include <limits>

#include "memlab/core/errors.hpp"
#include "memlab/core/random.hpp"
#include "memlab/linalg/norms.hpp"

namespace memlab {

namespace {

Matrix unit_spectral(Rng& rng, Eigen::Index r, Eigen::Index c) {
  Matrix D = gaussian_matrix(rng, r, c);
  const Scalar n = spectral_norm(D);
  return n > 0 ? Matrix(D / n) : D;
}

Vector unit_euclidean(Rng& rng, Eigen::Index n) {
  Vector v = gaussian_vector(rng, n);
  const Scalar s = v.norm();
  return s > 0 ? Vector(v / s) : v;
}

}  // namespace

PerturbationDirection draw_direction(const RnnParams& theta, std::uint64_t seed, std::uint64_t index,
                                     const PerturbationMask& mask) {
  Rng rng(derive_seed(seed, {0x9e27b0ULL, index}));
  const auto m = static_cast<Eigen::Index>(theta.m());
  const auto d = static_cast<Eigen::Index>(theta.d());
  PerturbationDirection dir;
  // Draw every tensor regardless of the mask so directions stay comparable
  // across masks.
  if (theta.is_reparameterized()) {
    // diag(dM) has spectral norm max_i |dM_i|.
    Vector dM = gaussian_vector(rng, m);
    const Scalar s = dM.cwiseAbs().maxCoeff();
    dir.dW = s > 0 ? Matrix(dM / s) : Matrix(dM);
  } else {
    dir.dW = unit_spectral(rng, m, m);
  }
  dir.dU = unit_spectral(rng, m, d);
  dir.db = unit_euclidean(rng, m);
  dir.dc = unit_euclidean(rng, m);
  if (!mask.recurrent) dir.dW.setZero();
  if (!mask.U) dir.dU.setZero();
  if (!mask.b) dir.db.setZero();
  if (!mask.c) dir.dc.setZero();
  return dir;
}

RnnParams apply_perturbation(const RnnParams& theta, const PerturbationDirection& dir, Scalar beta) {
  if (!(beta >= 0)) throw DomainError("perturbation radius must be nonnegative");
  RnnParams out = theta;
  if (beta == 0) return out;
  if (theta.is_reparameterized())
    out.set_M(theta.M() + beta * dir.dW.col(0));
  else
    out.set_W(theta.W() + beta * dir.dW);
  out.U += beta * dir.dU;
  out.b += beta * dir.db;
  out.c += beta * dir.dc;
  return out;
}

RnnParams perturb_params(const RnnParams& theta, Scalar beta, std::uint64_t seed, std::uint64_t index,
                         const PerturbationMask& mask) {
  return apply_perturbation(theta, draw_direction(theta, seed, index, mask), beta);
}

Scalar guarded_error(const ErrorFn& fn, const RnnParams& theta) {
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
  if (!theta.W().allFinite() || !theta.U.allFinite() || !theta.b.allFinite() || !theta.c.allFinite()) return inf;
  try {
    const Scalar e = fn(theta);
    return std::isfinite(e) ? e : inf;
  } catch (const NumericFailure&) {
    return inf;
  }
}

Scalar perturbation_error(const ErrorFn& error, const RnnParams& theta, Scalar beta, std::size_t n_samples,
                          std::uint64_t seed, const PerturbationMask& mask) {
  if (n_samples == 0) throw DomainError("perturbation_error: n_samples must be positive");
  Scalar worst = guarded_error(error, theta);
  for (std::size_t i = 0; i < n_samples; ++i)
    worst = std::max(worst, guarded_error(error, perturb_params(theta, beta, seed, i, mask)));
  return worst;
}

}  // namespace memlab
