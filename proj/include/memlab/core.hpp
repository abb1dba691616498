#pragma once

#include "memlab/core/activation.hpp"
#include "memlab/core/errors.hpp"
#include "memlab/core/memory_curve.hpp"
#include "memlab/core/parallel.hpp"
#include "memlab/core/params.hpp"
#include "memlab/core/random.hpp"
#include "memlab/core/signal.hpp"
#include "memlab/core/time_grid.hpp"
#include "memlab/core/types.hpp"
