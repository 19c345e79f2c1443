#pragma once

#include <random>

#include "sullivan/cdga.hpp"

namespace testing_support {

/// Random valid purely odd model built generator by generator: each new
/// differential is a random integer combination of a cocycle basis of the
/// right degree in the model built so far, so d^2 = 0 holds by construction.
/// Degrees are 1, or 1 and 3 when mixed_degrees is set.
sullivan::Cdga random_model(std::mt19937& rng, int generators, bool mixed_degrees = false);

}  // namespace testing_support
