#pragma once

#include <string>

#include "memlab/core/params.hpp"

namespace memlab {

std::string params_to_json(const RnnParams& theta);
RnnParams params_from_json(const std::string& text);

}  // namespace memlab
