#include "memlab/approx/expsum.hpp"

#include <cmath>

#include <Eigen/QR>

#include "memlab/core/errors.hpp"

namespace memlab {

const char* to_string(ExpSumMode mode) noexcept { return mode == ExpSumMode::Standard ? "standard" : "rescaled"; }

Vector ExpSumModel::exponents_for(ExpSumMode mode, std::size_t m, Scalar rate) {
  Vector w(static_cast<Eigen::Index>(m));
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const auto kk = static_cast<Scalar>(k + 1);
    w(k) = mode == ExpSumMode::Standard ? -rate * kk : -rate / kk;
  }
  return w;
}

Vector ExpSumModel::exponents() const { return exponents_for(mode, m(), rate); }

Scalar ExpSumModel::operator()(Scalar t) const {
  return coefficients.dot((exponents() * t).array().exp().matrix());
}

RnnParams ExpSumModel::to_rnn() const {
  const auto n = static_cast<Eigen::Index>(m());
  return RnnParams(Matrix(exponents().asDiagonal()), Matrix::Ones(n, 1), Vector::Zero(n), coefficients);
}

ExpSumFit fit_exponential_sum(const MemoryKernel& rho, std::size_t m, const TimeGrid& grid, ExpSumMode mode,
                              Scalar rate, Scalar damping) {
  if (m == 0) throw DomainError("fit_exponential_sum: m must be positive");
  if (!(grid.t_start() > 0)) throw DomainError("fit_exponential_sum: fit grid must be strictly positive");
  if (rho.dim() != 1) throw DomainError("fit_exponential_sum: scalar kernels only");
  if (!(rate > 0)) throw DomainError("fit_exponential_sum: basis rate must be positive");

  const auto n = static_cast<Eigen::Index>(grid.size());
  const auto mi = static_cast<Eigen::Index>(m);
  const Vector w = ExpSumModel::exponents_for(mode, m, rate);
  const Scalar wt = rho.weights()(0);

  Matrix A = Matrix::Zero(n + mi, mi);
  Vector rhs = Vector::Zero(n + mi);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar t = grid.time(static_cast<std::size_t>(i));
    A.row(i) = (w * t).array().exp().matrix().transpose();
    rhs(i) = wt * rho.profile(t);
  }
  A.bottomRows(mi).diagonal().setConstant(std::sqrt(damping));

  Eigen::ColPivHouseholderQR<Matrix> qr(A);
  if (qr.rank() < mi) throw NumericFailure("fit_exponential_sum: rank deficient beyond damping");
  ExpSumFit fit;
  fit.model.mode = mode;
  fit.model.rate = rate;
  fit.model.coefficients = qr.solve(rhs);
  if (!fit.model.coefficients.allFinite()) throw NumericFailure("fit_exponential_sum: non-finite coefficients");

  const Vector approx = A.topRows(n) * fit.model.coefficients;
  fit.residual = (rhs.head(n) - approx).cwiseAbs().sum() * grid.dt();
  return fit;
}

}  // namespace memlab
