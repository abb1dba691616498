#include "memlab/train/bptt.hpp"

#include <string>
#include <vector>

#include "memlab/core/errors.hpp"

namespace memlab {

namespace {

struct Forward {
  std::vector<Matrix> H;  // H[k], k = 0..J
  std::vector<Matrix> Z;  // pre-activations, k = 0..J-1
  Matrix residual;        // yhat - y, n_outputs x B
};

void check_batch(const RnnParams& theta, const BatchView& b) {
  if (b.data == nullptr || b.count == 0) throw DomainError("bptt: empty batch");
  if (b.first + b.count > b.data->size()) throw DomainError("bptt: batch out of range");
  if (theta.d() != b.data->d) throw DomainError("bptt: input dimension mismatch");
}

[[noreturn]] void report_divergence(const Matrix& values, std::size_t first, const char* what) {
  for (Eigen::Index j = 0; j < values.cols(); ++j)
    if (!values.col(j).allFinite()) throw DivergenceError(what, first + static_cast<std::size_t>(j));
  throw DivergenceError(what, first);
}

template <bool Store>
Forward forward(const RnnParams& theta, const Activation& act, const BatchView& b) {
  const Dataset& ds = *b.data;
  const auto B = static_cast<Eigen::Index>(b.count);
  const auto first = static_cast<Eigen::Index>(b.first);
  const auto d = static_cast<Eigen::Index>(ds.d);
  const std::size_t J = ds.output_offset + ds.n_outputs() - 1;
  const Scalar dt = ds.input_grid.dt();
  const Matrix& W = theta.W();

  Forward f;
  f.residual.resize(static_cast<Eigen::Index>(ds.n_outputs()), B);
  Matrix H = Matrix::Zero(static_cast<Eigen::Index>(theta.m()), B);
  if constexpr (Store) {
    f.H.reserve(J + 1);
    f.Z.reserve(J);
    f.H.push_back(H);
  }
  auto record = [&](std::size_t k) {
    if (k < ds.output_offset) return;
    const auto r = static_cast<Eigen::Index>(k - ds.output_offset);
    f.residual.row(r) = theta.c.transpose() * H - ds.Y.block(r, first, 1, B);
  };
  record(0);
  for (std::size_t k = 0; k < J; ++k) {
    Matrix Z = W * H + theta.U * ds.X.block(static_cast<Eigen::Index>(k) * d, first, d, B);
    Z.colwise() += theta.b;
    H += dt * apply_activation(act, Z);
    if constexpr (Store) {
      f.Z.push_back(std::move(Z));
      f.H.push_back(H);
    }
    record(k + 1);
  }
  if (!f.residual.allFinite()) report_divergence(f.residual, b.first, "bptt: non-finite model output");
  return f;
}

}  // namespace

Scalar mse_loss(const RnnParams& theta, const Activation& act, const BatchView& batch) {
  check_batch(theta, batch);
  const Forward f = forward<false>(theta, act, batch);
  return f.residual.squaredNorm() / static_cast<Scalar>(f.residual.size());
}

Gradients bptt_grad(const RnnParams& theta, const Activation& act, const BatchView& batch) {
  check_batch(theta, batch);
  const Dataset& ds = *batch.data;
  const Forward f = forward<true>(theta, act, batch);
  const auto B = static_cast<Eigen::Index>(batch.count);
  const auto first = static_cast<Eigen::Index>(batch.first);
  const auto d = static_cast<Eigen::Index>(ds.d);
  const auto m = static_cast<Eigen::Index>(theta.m());
  const Scalar dt = ds.input_grid.dt();
  const std::size_t J = f.Z.size();
  const Scalar scale = 2.0 / static_cast<Scalar>(f.residual.size());

  Gradients g;
  g.loss = f.residual.squaredNorm() / static_cast<Scalar>(f.residual.size());
  g.gW = Matrix::Zero(m, m);
  g.gU = Matrix::Zero(m, d);
  g.gb = Vector::Zero(m);
  g.gc = Vector::Zero(m);

  const Matrix Wt = theta.W().transpose();
  Matrix A = Matrix::Zero(m, B);  // dL/dH_k
  for (std::size_t j = J + 1; j-- > 0;) {
    if (j >= ds.output_offset) {
      const auto r = static_cast<Eigen::Index>(j - ds.output_offset);
      const Eigen::RowVectorXd dy = scale * f.residual.row(r);
      A += theta.c * dy;
      g.gc += f.H[j] * dy.transpose();
    }
    if (j == 0) break;
    const std::size_t k = j - 1;
    const Matrix dZ = dt * A.cwiseProduct(apply_derivative(act, f.Z[k]));
    g.gW.noalias() += dZ * f.H[k].transpose();
    g.gU.noalias() += dZ * ds.X.block(static_cast<Eigen::Index>(k) * d, first, d, B).transpose();
    g.gb += dZ.rowwise().sum();
    A.noalias() += Wt * dZ;
    if (!A.allFinite()) report_divergence(A, batch.first, "bptt: non-finite gradient");
  }
  if (theta.is_reparameterized()) g.gM = g.gW.diagonal().cwiseProduct(theta.M().unaryExpr([k = theta.reparam()](Scalar z) {
    return reparam_derivative(k, z);
  }));
  if (!g.gW.allFinite() || !g.gU.allFinite() || !g.gb.allFinite() || !g.gc.allFinite())
    throw DivergenceError("bptt: non-finite gradient", batch.first);
  return g;
}

Vector pack_params(const RnnParams& theta) {
  const Eigen::Index m = static_cast<Eigen::Index>(theta.m());
  const Eigen::Index rec = theta.is_reparameterized() ? m : m * m;
  Vector flat(rec + theta.U.size() + 2 * m);
  if (theta.is_reparameterized())
    flat.head(m) = theta.M();
  else
    flat.head(rec) = theta.W().reshaped();
  flat.segment(rec, theta.U.size()) = theta.U.reshaped();
  flat.segment(rec + theta.U.size(), m) = theta.b;
  flat.tail(m) = theta.c;
  return flat;
}

void unpack_params(const Vector& flat, RnnParams& theta) {
  const Eigen::Index m = static_cast<Eigen::Index>(theta.m());
  const Eigen::Index rec = theta.is_reparameterized() ? m : m * m;
  if (flat.size() != rec + theta.U.size() + 2 * m) throw DomainError("unpack_params: size mismatch");
  if (theta.is_reparameterized())
    theta.set_M(flat.head(m));
  else
    theta.set_W(flat.head(rec).reshaped(m, m));
  theta.U = flat.segment(rec, theta.U.size()).reshaped(theta.U.rows(), theta.U.cols());
  theta.b = flat.segment(rec + theta.U.size(), m);
  theta.c = flat.tail(m);
}

Vector pack_gradients(const Gradients& g, const RnnParams& theta) {
  const Eigen::Index m = static_cast<Eigen::Index>(theta.m());
  const Eigen::Index rec = theta.is_reparameterized() ? m : m * m;
  Vector flat(rec + g.gU.size() + 2 * m);
  if (theta.is_reparameterized())
    flat.head(m) = g.gM;
  else
    flat.head(rec) = g.gW.reshaped();
  flat.segment(rec, g.gU.size()) = g.gU.reshaped();
  flat.segment(rec + g.gU.size(), m) = g.gb;
  flat.tail(m) = g.gc;
  return flat;
}

}  // namespace memlab
