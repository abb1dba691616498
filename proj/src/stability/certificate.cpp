#include "memlab/stability/certificate.hpp"

#include <cmath>
#include <limits>

#include "memlab/core/errors.hpp"
#include "memlab/core/random.hpp"
#include "memlab/linalg/lyapunov.hpp"
#include "memlab/linalg/spectral.hpp"

namespace memlab {

CertificateReport tanh_contraction_certificate(const Matrix& W, Scalar L, std::size_t samples, std::uint64_t seed) {
  if (!(L > 0 && L < 1)) throw DomainError("certificate: L must lie in (0, 1)");
  const auto spec = spectral_abscissa(W);
  if (!spec.is_hurwitz) throw DomainError("certificate: W is not Hurwitz");
  const Eigen::Index m = W.rows();

  CertificateReport r;
  r.beta0 = -spec.abscissa;
  r.M0 = W.cwiseAbs().maxCoeff();
  r.L = L;
  r.upsilon = std::sqrt(r.beta0 * L / r.M0);
  const Matrix P = lyapunov_solve(W, Matrix::Identity(m, m));
  r.P_norm = spectral_norm(P);
  r.samples = samples;
  r.worst_margin = -std::numeric_limits<Scalar>::infinity();
  r.witness = Vector::Zero(m);

  Rng rng(derive_seed(seed, {0xce27ULL}));
  std::uniform_real_distribution<Scalar> unif(0.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector v = gaussian_vector(rng, m);
    const Scalar n = v.norm();
    if (n == 0) continue;
    v *= r.upsilon * std::pow(unif(rng), 1.0 / static_cast<Scalar>(m)) / n;
    const Scalar v2 = v.squaredNorm();
    if (v2 == 0) continue;
    const Vector d2 = v.cwiseAbs2();
    // v'(W'D^2 P + P D^2 W)v = 2 (D^2 W v)'(P v)
    const Scalar q = 2.0 * d2.cwiseProduct(W * v).dot(P * v);
    const Scalar dV = -v2 - q;
    const Scalar margin = (dV + (1 - L) * v2) / v2;
    if (margin > 0) ++r.violations;
    if (margin > r.worst_margin) {
      r.worst_margin = margin;
      r.witness = v;
    }
  }
  return r;
}

}  // namespace memlab
