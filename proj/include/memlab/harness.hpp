#pragma once

#include "memlab/harness/config.hpp"
#include "memlab/harness/experiments.hpp"
#include "memlab/harness/report.hpp"
