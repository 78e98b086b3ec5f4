#include "divctl/preprocess/standardize.hpp"

#include <cmath>

#include "divctl/core/numeric.hpp"

namespace divctl {

Frame standardize(const Frame& frame) {
    const num::MeanVar mv = num::mean_variance(frame.pixels());
    if (!(mv.var > 0.0))
        throw ZeroVariance("standardize requires nonzero per-frame variance");
    const double inv_sigma = 1.0 / std::sqrt(mv.var);
    Frame out(frame.width(), frame.height(), FrameKind::standardized);
    std::span<const double> in_px = frame.pixels();
    std::span<double> out_px = out.pixels();
    for (std::size_t i = 0; i < in_px.size(); ++i)
        out_px[i] = (in_px[i] - mv.mean) * inv_sigma;
    return out;
}

}  // namespace divctl
