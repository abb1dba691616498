#pragma once

#include <cstdint>
#include <functional>

#include "memlab/core/params.hpp"

namespace memlab {

/// Which tensors a perturbation touches. For reparameterized models the
/// recurrent entry refers to M instead of W.
struct PerturbationMask {
  bool recurrent = true;
  bool U = true;
  bool b = true;
  bool c = true;
};

/// Unit direction per tensor: spectral norm 1 for W and U (and for diag(dM)),
/// Euclidean norm 1 for b and c. Masked tensors are zero.
struct PerturbationDirection {
  Matrix dW;  // m x m, or m x 1 holding dM
  Matrix dU;
  Vector db;
  Vector dc;
};

PerturbationDirection draw_direction(const RnnParams& theta, std::uint64_t seed, std::uint64_t index,
                                     const PerturbationMask& mask = {});

RnnParams apply_perturbation(const RnnParams& theta, const PerturbationDirection& dir, Scalar beta);

/// A boundary sample of the beta-ball around theta in the max-of-norms metric.
RnnParams perturb_params(const RnnParams& theta, Scalar beta, std::uint64_t seed, std::uint64_t index,
                         const PerturbationMask& mask = {});

/// Error of a perturbed model against a fixed target. May return +inf.
using ErrorFn = std::function<Scalar(const RnnParams&)>;

/// Calls fn, mapping divergence, numeric failure and non-finite results to +inf.
Scalar guarded_error(const ErrorFn& fn, const RnnParams& theta);

/// max(error(theta), max_i error(theta_i)) over n boundary samples.
Scalar perturbation_error(const ErrorFn& error, const RnnParams& theta, Scalar beta, std::size_t n_samples,
                          std::uint64_t seed, const PerturbationMask& mask = {});

}  // namespace memlab
