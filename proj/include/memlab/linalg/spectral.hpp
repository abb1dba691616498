#pragma once

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

#include "memlab/core/errors.hpp"

namespace memlab {

template <typename Scalar>
struct SpectralReport {
  std::vector<std::complex<Scalar>> eigenvalues;
  Scalar abscissa = -std::numeric_limits<Scalar>::infinity();
  bool is_hurwitz = false;
};

/// Eigenvalues of a dense real matrix (Hessenberg reduction followed by
/// shifted Francis QR, via Eigen::EigenSolver) and the spectral abscissa.
template <typename Derived>
SpectralReport<typename Derived::Scalar> spectral_abscissa(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (A.rows() != A.cols()) throw DomainError("spectral_abscissa: matrix must be square");
  if (A.rows() > 1024) throw DomainError("spectral_abscissa: dimension above 1024");
  if (!A.allFinite()) throw DomainError("spectral_abscissa: non-finite entries");

  SpectralReport<Scalar> report;
  if (A.rows() == 0) return report;
  Eigen::EigenSolver<Mat> solver(Mat(A), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("spectral_abscissa: QR iteration did not converge");
  const auto& ev = solver.eigenvalues();
  report.eigenvalues.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    report.eigenvalues.push_back(ev(i));
    report.abscissa = std::max(report.abscissa, ev(i).real());
  }
  report.is_hurwitz = report.abscissa < 0;
  return report;
}

}  // namespace memlab
