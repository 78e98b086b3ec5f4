#pragma once

#include <cstdint>

#include "divctl/core/frame.hpp"

namespace divctl {

struct AugmentParams {
    double speckle_alpha = 0.0;  // noise amplitude, >= 0
    std::uint64_t rng_seed = 0;
};

// Additive per-pixel i.i.d. standard-normal noise scaled by alpha; negative
// results clamp to zero so raw frames stay valid. Draws are keyed by
// (seed, frame_index, pixel index), so the result is independent of
// evaluation order.
Frame add_speckle(const Frame& frame, const AugmentParams& params,
                  std::uint64_t frame_index = 0);

}  // namespace divctl
