#pragma once

#include "memlab/targets/functional.hpp"
#include "memlab/targets/kernel.hpp"
#include "memlab/targets/teacher.hpp"
