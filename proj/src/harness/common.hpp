#pragma once

#include <string>

#include "memlab/harness/report.hpp"
#include "memlab/stability/sweep.hpp"

namespace memlab::detail {

/// Long-format sweep table plus the per-m stability columns.
Table sweep_csv_table(const SweepTable& t, const std::string& name);
Table stability_table(const SweepTable& t, const StabilityEstimate& e, const std::string& name);
Chart sweep_chart(const SweepTable& t, const std::string& name, const std::string& title);
nlohmann::json estimate_json(const StabilityEstimate& e);

}  // namespace memlab::detail
