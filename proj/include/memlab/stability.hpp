#pragma once

#include "memlab/stability/certificate.hpp"
#include "memlab/stability/perturb.hpp"
#include "memlab/stability/sweep.hpp"
