#pragma once

#include "memlab/dynamics/gru.hpp"
#include "memlab/dynamics/rnn.hpp"
#include "memlab/dynamics/trajectory.hpp"
