#include "memlab/targets/teacher.hpp"

#include <cmath>

#include "memlab/core/random.hpp"
#include "memlab/linalg/spectral.hpp"

namespace memlab {

Matrix shift_to_abscissa(const Matrix& S, Scalar a) {
  const Scalar alpha = spectral_abscissa(S).abscissa;
  Matrix W = S;
  W.diagonal().array() -= alpha - a;
  return W;
}

RnnParams draw_teacher_params(std::uint64_t seed, std::size_t m, std::size_t d, const TeacherSpectrum& spectrum) {
  Rng rng(derive_seed(seed, {0x7eac4e5ULL, m, d}));
  const auto mi = static_cast<Eigen::Index>(m);
  const Scalar inv = 1.0 / std::sqrt(static_cast<Scalar>(m));
  Matrix S = gaussian_matrix(rng, mi, mi, spectrum.recurrent_scale * inv);
  Matrix U = gaussian_matrix(rng, mi, static_cast<Eigen::Index>(d), spectrum.input_scale);
  Vector c = gaussian_vector(rng, mi, spectrum.readout_scale * inv);
  Vector b = spectrum.bias_scale > 0 ? gaussian_vector(rng, mi, spectrum.bias_scale) : Vector::Zero(mi);
  Matrix W = spectrum.abscissa ? shift_to_abscissa(S, *spectrum.abscissa) : S;
  return RnnParams(std::move(W), std::move(U), std::move(b), std::move(c));
}

FunctionalTarget make_teacher_rnn(std::uint64_t seed, std::size_t m, const TeacherSpectrum& spectrum,
                                  const Activation& act, std::size_t substeps) {
  return make_rnn_target(draw_teacher_params(seed, m, 1, spectrum), act, Integrator::RK4, substeps,
                         TargetDescriptor::TeacherRnn);
}

}  // namespace memlab
