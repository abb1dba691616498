#pragma once

#include "memlab/linalg/expm.hpp"
#include "memlab/linalg/lyapunov.hpp"
#include "memlab/linalg/norms.hpp"
#include "memlab/linalg/spectral.hpp"
