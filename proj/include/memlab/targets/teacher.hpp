#pragma once

#include <cstdint>
#include <optional>

#include "memlab/core/activation.hpp"
#include "memlab/core/params.hpp"
#include "memlab/targets/functional.hpp"

namespace memlab {

/// Recurrent spectrum of a random teacher. With `abscissa` set, W is a
/// Gaussian matrix shifted along the diagonal so that its spectral abscissa
/// equals the target exactly; otherwise W is the raw scaled Gaussian.
struct TeacherSpectrum {
  std::optional<Scalar> abscissa;
  Scalar recurrent_scale = 1.0;  // multiplies 1/sqrt(m)
  Scalar input_scale = 1.0;
  Scalar readout_scale = 1.0;    // multiplies 1/sqrt(m)
  Scalar bias_scale = 0.0;       // 0 is the unbiased preset
};

/// W = S - (abscissa(S) - a) I.
Matrix shift_to_abscissa(const Matrix& S, Scalar a);

RnnParams draw_teacher_params(std::uint64_t seed, std::size_t m, std::size_t d, const TeacherSpectrum& spectrum);

FunctionalTarget make_teacher_rnn(std::uint64_t seed, std::size_t m, const TeacherSpectrum& spectrum,
                                  const Activation& act, std::size_t substeps = 1);

}  // namespace memlab
