#pragma once

#include "memlab/train/adam.hpp"
#include "memlab/train/bptt.hpp"
#include "memlab/train/checkpoint.hpp"
#include "memlab/train/config.hpp"
#include "memlab/train/dataset.hpp"
#include "memlab/train/reparam.hpp"
#include "memlab/train/trainer.hpp"
