#pragma once

#include "memlab/approx/error_measures.hpp"
#include "memlab/approx/expsum.hpp"
