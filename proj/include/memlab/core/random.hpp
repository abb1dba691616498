#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "memlab/core/types.hpp"

namespace memlab {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stable per-item seed from a base seed and a key path, so work items can be
/// evaluated in any order.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> key) noexcept;

Matrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, Scalar scale = 1.0);
Vector gaussian_vector(Rng& rng, Eigen::Index n, Scalar scale = 1.0);

}  // namespace memlab
