#pragma once

#include <cmath>

#include <Eigen/Core>
#include <Eigen/LU>

#include "memlab/core/errors.hpp"

namespace memlab {

namespace detail {

template <typename Mat>
typename Mat::Scalar one_norm(const Mat& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

// Pade numerator/denominator pieces U (odd) and V (even) for degree 3..13,
// Higham (2005) coefficients.
template <typename Mat>
void pade_uv(const Mat& A, int degree, Mat& U, Mat& V) {
  using Scalar = typename Mat::Scalar;
  const Mat I = Mat::Identity(A.rows(), A.cols());
  const Mat A2 = A * A;
  if (degree == 3) {
    const Scalar b[] = {120., 60., 12., 1.};
    U = A * (b[3] * A2 + b[1] * I);
    V = b[2] * A2 + b[0] * I;
  } else if (degree == 5) {
    const Scalar b[] = {30240., 15120., 3360., 420., 30., 1.};
    const Mat A4 = A2 * A2;
    U = A * (b[5] * A4 + b[3] * A2 + b[1] * I);
    V = b[4] * A4 + b[2] * A2 + b[0] * I;
  } else if (degree == 7) {
    const Scalar b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    const Mat A4 = A2 * A2;
    const Mat A6 = A4 * A2;
    U = A * (b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    V = b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  } else if (degree == 9) {
    const Scalar b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                        2162160.,     110880.,     3960.,       90.,        1.};
    const Mat A4 = A2 * A2;
    const Mat A6 = A4 * A2;
    const Mat A8 = A6 * A2;
    U = A * (b[9] * A8 + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    V = b[8] * A8 + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  } else {
    const Scalar b[] = {64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
                        129060195264000.,   10559470521600.,    670442572800.,    33522128640.,
                        1323241920.,        40840800.,          960960.,          16380.,
                        182.,               1.};
    const Mat A4 = A2 * A2;
    const Mat A6 = A4 * A2;
    U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  }
}

}  // namespace detail

/// e^{A t} by scaling and squaring with a diagonal Pade approximant of degree
/// chosen from the 1-norm (3, 5, 7, 9 or 13).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(const Eigen::MatrixBase<Derived>& A,
                                                                             typename Derived::Scalar t = 1) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (A.rows() != A.cols()) throw DomainError("expm: matrix must be square");
  const Mat At = A * t;
  if (!At.allFinite()) throw NumericFailure("expm: non-finite input");
  const Eigen::Index n = At.rows();
  if (n == 0) return Mat(0, 0);

  const Scalar norm = detail::one_norm(At);
  const Scalar theta[] = {1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
                          2.097847961257068e0, 5.371920351148152e0};
  const int degrees[] = {3, 5, 7, 9, 13};

  Mat U, V;
  int squarings = 0;
  int degree = 13;
  for (int i = 0; i < 4; ++i) {
    if (norm <= theta[i]) {
      degree = degrees[i];
      break;
    }
  }
  Mat scaled = At;
  if (degree == 13 && norm > theta[4]) {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta[4]))));
    if (squarings > 1000) throw NumericFailure("expm: norm too large");
    scaled = At / std::ldexp(Scalar(1), squarings);
  }
  detail::pade_uv(scaled, degree, U, V);
  Mat E = (V - U).partialPivLu().solve(V + U);
  for (int s = 0; s < squarings; ++s) E = E * E;
  if (!E.allFinite()) throw NumericFailure("expm: overflow");
  return E;
}

}  // namespace memlab
