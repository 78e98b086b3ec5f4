#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "divctl/core/frame.hpp"

namespace divctl {

DIVCTL_DEFINE_ERROR(EmptyInput, ValidationError);
DIVCTL_DEFINE_ERROR(DegenerateFrame, ValidationError);

// 256 uniform bins over [lo, hi]; a pixel exactly at hi lands in the last bin.
struct IntensityHistogram {
    static constexpr int kBins = 256;
    std::array<std::uint64_t, kBins> counts{};
    double lo = 0.0;
    double hi = 1.0;

    std::uint64_t total() const;
    int bin_of(double v) const;  // clamps out-of-range values into edge bins
    double bin_center(int bin) const;
};

// Global [min, max] range across all frames; degenerate ranges are widened
// to hi = lo + 1 so constant inputs still tally.
IntensityHistogram build_histogram(std::span<const Frame> frames);

// Tallies one frame into an existing histogram (range fixed by `hist`).
void accumulate_histogram(IntensityHistogram& hist, const Frame& frame);

// Classic monotone CDF matching: v -> reference_quantile(source_cdf(v)).
// Output kind is raw_camera.
Frame histogram_match(const Frame& frame, const IntensityHistogram& reference);

// CSV with a `# HIST v1 lo=<..> hi=<..>` line, then `bin_index,count` rows.
void save_histogram(const std::string& path, const IntensityHistogram& hist);
IntensityHistogram load_histogram(const std::string& path);

}  // namespace divctl
