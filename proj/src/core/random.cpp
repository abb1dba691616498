#include "memlab/core/random.hpp"

namespace memlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> key) noexcept {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t k : key) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

Matrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, Scalar scale) {
  std::normal_distribution<Scalar> n(0.0, 1.0);
  Matrix out(rows, cols);
  // Fill column-major explicitly so the draw order is part of the contract.
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = scale * n(rng);
  return out;
}

Vector gaussian_vector(Rng& rng, Eigen::Index n, Scalar scale) { return gaussian_matrix(rng, n, 1, scale); }

}  // namespace memlab
