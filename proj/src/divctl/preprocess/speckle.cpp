#include "divctl/preprocess/speckle.hpp"

#include <algorithm>

#include "divctl/core/rng.hpp"

namespace divctl {

Frame add_speckle(const Frame& frame, const AugmentParams& params,
                  std::uint64_t frame_index) {
    if (params.speckle_alpha < 0.0)
        throw ValidationError("speckle alpha must be >= 0");
    if (frame.kind() == FrameKind::standardized)
        throw ValidationError("speckle applies to raw frames only");
    if (params.speckle_alpha == 0.0) return frame;

    const std::uint64_t key = rng::derive_stream(params.rng_seed, frame_index);
    Frame out = frame;
    std::span<double> px = out.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = std::max(0.0, px[i] + params.speckle_alpha * rng::normal(key, i));
    return out;
}

}  // namespace divctl
