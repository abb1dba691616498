#include "memlab/core/params.hpp"

#include <cmath>
#include <utility>

#include "memlab/core/errors.hpp"

namespace memlab {

const char* to_string(ReparamKind kind) noexcept {
  switch (kind) {
    case ReparamKind::Direct: return "direct";
    case ReparamKind::NegExp: return "negexp";
    case ReparamKind::NegSoftplus: return "negsoftplus";
  }
  return "?";
}

ReparamKind reparam_from_string(const std::string& name) {
  if (name == "direct") return ReparamKind::Direct;
  if (name == "negexp" || name == "exp") return ReparamKind::NegExp;
  if (name == "negsoftplus" || name == "softplus") return ReparamKind::NegSoftplus;
  throw DomainError("unknown reparameterization: " + name);
}

namespace {
Scalar softplus(Scalar z) noexcept { return z > 30.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }
}  // namespace

Scalar reparam_value(ReparamKind kind, Scalar z) noexcept {
  switch (kind) {
    case ReparamKind::Direct: return z;
    case ReparamKind::NegExp: return -std::exp(z);
    case ReparamKind::NegSoftplus: return -softplus(z);
  }
  return z;
}

Scalar reparam_derivative(ReparamKind kind, Scalar z) noexcept {
  switch (kind) {
    case ReparamKind::Direct: return 1.0;
    case ReparamKind::NegExp: return -std::exp(z);
    case ReparamKind::NegSoftplus: return -1.0 / (1.0 + std::exp(-z));
  }
  return 1.0;
}

Scalar reparam_inverse(ReparamKind kind, Scalar w) {
  switch (kind) {
    case ReparamKind::Direct: return w;
    case ReparamKind::NegExp:
      if (!(w < 0)) throw DomainError("negexp reparameterization only reaches negative values");
      return std::log(-w);
    case ReparamKind::NegSoftplus:
      if (!(w < 0)) throw DomainError("negsoftplus reparameterization only reaches negative values");
      return std::log(std::expm1(-w));
  }
  return w;
}

RnnParams::RnnParams(Matrix W, Matrix U_, Vector b_, Vector c_)
    : U(std::move(U_)), b(std::move(b_)), c(std::move(c_)), W_(std::move(W)) {
  validate();
}

RnnParams RnnParams::reparameterized(ReparamKind kind, Vector M, Matrix U, Vector b, Vector c) {
  RnnParams p;
  p.U = std::move(U);
  p.b = std::move(b);
  p.c = std::move(c);
  p.kind_ = kind;
  if (kind == ReparamKind::Direct) {
    p.W_ = M.asDiagonal();
  } else {
    p.set_M(std::move(M));
  }
  p.validate();
  return p;
}

RnnParams RnnParams::zeros(std::size_t m, std::size_t d, ReparamKind kind) {
  const auto mi = static_cast<Eigen::Index>(m);
  const auto di = static_cast<Eigen::Index>(d);
  if (kind == ReparamKind::Direct)
    return RnnParams(Matrix::Zero(mi, mi), Matrix::Zero(mi, di), Vector::Zero(mi), Vector::Zero(mi));
  return reparameterized(kind, Vector::Zero(mi), Matrix::Zero(mi, di), Vector::Zero(mi), Vector::Zero(mi));
}

const Vector& RnnParams::M() const {
  if (!M_) throw DomainError("direct parameterization has no pre-image M");
  return *M_;
}

void RnnParams::set_W(Matrix W) {
  if (is_reparameterized()) throw DomainError("W is derived from M in a reparameterized model");
  W_ = std::move(W);
}

void RnnParams::set_M(Vector M) {
  if (!is_reparameterized()) throw DomainError("set_M requires a reparameterized model");
  W_ = M.unaryExpr([k = kind_](Scalar z) { return reparam_value(k, z); }).asDiagonal();
  M_ = std::move(M);
}

void RnnParams::validate() const {
  const Eigen::Index m = c.size();
  if (W_.rows() != m || W_.cols() != m) throw DomainError("W must be m x m");
  if (U.rows() != m) throw DomainError("U must have m rows");
  if (b.size() != m) throw DomainError("b must have length m");
  if (M_ && M_->size() != m) throw DomainError("M must have length m");
  if (!W_.allFinite() || !U.allFinite() || !b.allFinite() || !c.allFinite())
    throw DomainError("RNN parameters must be finite");
}

}  // namespace memlab
