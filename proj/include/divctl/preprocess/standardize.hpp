#pragma once

#include "divctl/core/frame.hpp"

namespace divctl {

DIVCTL_DEFINE_ERROR(ZeroVariance, ValidationError);

// Per-frame standardization: subtract the mean and divide by the population
// standard deviation. Exactly invariant (to rounding) under positive affine
// intensity changes, which is what removes global-brightness dependence.
Frame standardize(const Frame& frame);

}  // namespace divctl
