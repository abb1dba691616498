#pragma once

#include <cmath>

#include <Eigen/Core>

#include "memlab/core/params.hpp"

namespace memlab {

/// Largest singular value by power iteration on A'A. Stops when the relative
/// change of the estimate drops below `tol`.
template <typename Derived>
typename Derived::Scalar spectral_norm(const Eigen::MatrixBase<Derived>& A, typename Derived::Scalar tol = 1e-10,
                                       int max_iter = 100000) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (A.size() == 0) return Scalar(0);
  if (A.cols() == 1) return A.col(0).norm();
  if (A.rows() == 1) return A.row(0).norm();
  const Scalar scale = A.cwiseAbs().maxCoeff();
  if (scale == Scalar(0)) return Scalar(0);

  // Deterministic, generic start vector; a constant vector can miss the top
  // singular direction for structured matrices.
  Vec x(A.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Scalar(1) + std::sin(Scalar(1.7) * (i + 1));
  x.normalize();
  Scalar sigma2 = 0;
  for (int it = 0; it < max_iter; ++it) {
    Vec y = A.transpose() * (A * x);
    const Scalar next = x.dot(y);
    const Scalar ny = y.norm();
    if (ny == Scalar(0)) return Scalar(0);
    x = y / ny;
    if (it > 2 && std::abs(next - sigma2) <= tol * next * Scalar(0.5)) {
      sigma2 = next;
      break;
    }
    sigma2 = next;
  }
  return std::sqrt((A * x).squaredNorm());
}

/// max(|W|_2, |U|_2, |b|_2, |c|_2).
inline Scalar param_norm(const RnnParams& p) {
  using std::max;
  return max(max(spectral_norm(p.W()), spectral_norm(p.U)), max(p.b.norm(), p.c.norm()));
}

}  // namespace memlab
