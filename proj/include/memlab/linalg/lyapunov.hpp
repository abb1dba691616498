#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "memlab/core/errors.hpp"
#include "memlab/linalg/expm.hpp"
#include "memlab/linalg/norms.hpp"
#include "memlab/linalg/spectral.hpp"

namespace memlab {

enum class LyapunovMethod { Auto, Kronecker, Schur };

struct LyapunovOptions {
  LyapunovMethod method = LyapunovMethod::Auto;
  Eigen::Index kronecker_max_dim = 64;
};

namespace detail {

template <typename Mat>
Mat lyapunov_kronecker(const Mat& W, const Mat& Q) {
  using Scalar = typename Mat::Scalar;
  const Eigen::Index m = W.rows();
  const Mat Wt = W.transpose();
  // vec(W'P + PW) = (I (x) W' + W' (x) I) vec(P)
  Mat K = Mat::Zero(m * m, m * m);
  for (Eigen::Index j = 0; j < m; ++j) {
    K.block(j * m, j * m, m, m) += Wt;
    for (Eigen::Index i = 0; i < m; ++i) K.block(i * m, j * m, m, m).diagonal().array() += Wt(i, j);
  }
  Eigen::FullPivLU<Mat> lu(K);
  if (!lu.isInvertible()) throw NumericFailure("lyapunov_solve: singular Kronecker system");
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs = -Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(Q.data(), m * m);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> p = lu.solve(rhs);
  return Eigen::Map<Mat>(p.data(), m, m);
}

// Bartels-Stewart on the complex Schur form W = Z T Z^*:
// T^* Y + Y T = -Z^* Q Z, solved column by column.
template <typename Mat>
Mat lyapunov_schur(const Mat& W, const Mat& Q) {
  using Scalar = typename Mat::Scalar;
  using CMat = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index m = W.rows();
  Eigen::ComplexSchur<Mat> schur(W);
  if (schur.info() != Eigen::Success) throw NumericFailure("lyapunov_solve: Schur decomposition failed");
  const CMat& T = schur.matrixT();
  const CMat& Z = schur.matrixU();
  const CMat C = -(Z.adjoint() * Q.template cast<std::complex<Scalar>>() * Z);
  const CMat Ts = T.adjoint();  // lower triangular
  CMat Y = CMat::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> rhs = C.col(j);
    for (Eigen::Index k = 0; k < j; ++k) rhs -= T(k, j) * Y.col(k);
    CMat L = Ts;
    L.diagonal().array() += T(j, j);
    Y.col(j) = L.template triangularView<Eigen::Lower>().solve(rhs);
  }
  return (Z * Y * Z.adjoint()).real();
}

}  // namespace detail

/// Solves W'P + PW = -Q for Hurwitz W. The result is symmetrized.
template <typename DerivedW, typename DerivedQ>
Eigen::Matrix<typename DerivedW::Scalar, Eigen::Dynamic, Eigen::Dynamic> lyapunov_solve(
    const Eigen::MatrixBase<DerivedW>& W, const Eigen::MatrixBase<DerivedQ>& Q, const LyapunovOptions& opts = {}) {
  using Scalar = typename DerivedW::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (W.rows() != W.cols() || Q.rows() != W.rows() || Q.cols() != W.cols())
    throw DomainError("lyapunov_solve: shape mismatch");
  if (!spectral_abscissa(W).is_hurwitz) throw DomainError("lyapunov_solve: W is not Hurwitz");
  if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + Q.cwiseAbs().maxCoeff()))
    throw DomainError("lyapunov_solve: Q must be symmetric");

  const Mat Wm = W;
  const Mat Qm = Q;
  const bool kron = opts.method == LyapunovMethod::Kronecker ||
                    (opts.method == LyapunovMethod::Auto && Wm.rows() <= opts.kronecker_max_dim);
  Mat P = kron ? detail::lyapunov_kronecker(Wm, Qm) : detail::lyapunov_schur(Wm, Qm);
  if (!P.allFinite()) throw NumericFailure("lyapunov_solve: non-finite solution");
  return (P + P.transpose()) / Scalar(2);
}

/// ||W'P + PW + Q||_2.
template <typename DW, typename DP, typename DQ>
typename DW::Scalar lyapunov_residual(const Eigen::MatrixBase<DW>& W, const Eigen::MatrixBase<DP>& P,
                                      const Eigen::MatrixBase<DQ>& Q) {
  using Mat = Eigen::Matrix<typename DW::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat R = W.transpose() * P + P * W + Q;
  return spectral_norm(R);
}

/// Composite Simpson quadrature of P = int_0^T e^{W't} Q e^{Wt} dt with `steps`
/// (even) panels. Independent of lyapunov_solve; used as a cross-check.
template <typename DW, typename DQ>
Eigen::Matrix<typename DW::Scalar, Eigen::Dynamic, Eigen::Dynamic> lyapunov_integral(
    const Eigen::MatrixBase<DW>& W, const Eigen::MatrixBase<DQ>& Q, typename DW::Scalar T, int steps) {
  using Scalar = typename DW::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (steps % 2) ++steps;
  const Scalar h = T / steps;
  const Mat step = expm(W, h);
  Mat E = Mat::Identity(W.rows(), W.cols());
  Mat P = Mat::Zero(W.rows(), W.cols());
  for (int k = 0; k <= steps; ++k) {
    const Scalar w = (k == 0 || k == steps) ? 1 : (k % 2 ? 4 : 2);
    P += w * (E.transpose() * Q * E);
    E = E * step;
  }
  return P * (h / 3);
}

}  // namespace memlab
