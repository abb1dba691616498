#pragma once

#include "memlab/memory/classify.hpp"
#include "memlab/memory/probe.hpp"
