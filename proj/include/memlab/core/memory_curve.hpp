#pragma once

#include <vector>

#include "memlab/core/signal.hpp"
#include "memlab/core/time_grid.hpp"
#include "memlab/core/types.hpp"

namespace memlab {

enum class Normalization { InfNorm, InfNormPlusOne };

const char* to_string(Normalization n) noexcept;
Normalization normalization_from_string(const char* name);

/// Sampled memory function t -> M(H)(t) together with how it was probed.
struct MemoryCurve {
  TimeGrid grid;
  Vector values;
  ProbeKind probe_kind = ProbeKind::Heaviside;
  std::vector<Vector> amplitudes;
  Normalization normalization = Normalization::InfNorm;

  MemoryCurve(TimeGrid g, Vector v, ProbeKind kind, std::vector<Vector> amps,
              Normalization norm = Normalization::InfNorm);

  std::size_t size() const noexcept { return grid.size(); }
};

}  // namespace memlab
