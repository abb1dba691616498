#include "memlab/core/memory_curve.hpp"

#include <cstring>
#include <string>
#include <utility>

#include "memlab/core/errors.hpp"

namespace memlab {

const char* to_string(Normalization n) noexcept {
  return n == Normalization::InfNorm ? "inf_norm" : "inf_norm_plus_one";
}

Normalization normalization_from_string(const char* name) {
  if (std::strcmp(name, "inf_norm") == 0) return Normalization::InfNorm;
  if (std::strcmp(name, "inf_norm_plus_one") == 0) return Normalization::InfNormPlusOne;
  throw DomainError(std::string("unknown normalization: ") + name);
}

MemoryCurve::MemoryCurve(TimeGrid g, Vector v, ProbeKind kind, std::vector<Vector> amps, Normalization norm)
    : grid(g), values(std::move(v)), probe_kind(kind), amplitudes(std::move(amps)), normalization(norm) {
  if (static_cast<std::size_t>(values.size()) != grid.size())
    throw DomainError("memory curve length does not match its grid");
  if (!values.allFinite()) throw NumericFailure("memory curve contains non-finite values");
  if (values.size() > 0 && values.minCoeff() < 0) throw DomainError("memory curve values must be nonnegative");
}

}  // namespace memlab
