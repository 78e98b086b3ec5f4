#pragma once

#include <span>
#include <vector>

#include "divctl/core/frame.hpp"

namespace divctl {

DIVCTL_DEFINE_ERROR(AllZeroOutboard, Error);
DIVCTL_DEFINE_ERROR(XPointOffFrame, Error);

// How the emission "elevation" row is reduced from the outboard row sums S_i.
//   weighted_rms:  sqrt( sum((i*S_i)^2) / sum(S_i^2) )   (default)
//   weighted_mean: sum(i*S_i) / sum(S_i)                  (centroid row)
enum class LabelEstimator { weighted_rms, weighted_mean };

const char* to_string(LabelEstimator e);
LabelEstimator label_estimator_from_string(const std::string& s);

struct LabeledSample {
    Frame frame;  // camera-view frame paired with the label
    double z_e_label = 0.0;
    GeometryState geometry;
};

// Ground-truth emission height from an inverted-emissivity frame: sums
// intensities over columns at/outboard of the X-point column, reduces the
// row sums to a fractional row, and converts that row to meters.
double label_emission_height(const Frame& frame, const PixelCalibration& cal,
                             const GeometryState& geom,
                             LabelEstimator estimator = LabelEstimator::weighted_rms);

struct DatasetEntry {
    Frame inverted;   // labeling input
    Frame camera;     // paired camera view of the same plant state
    GeometryState geometry;
};

// Labels every entry; errors are rethrown with the entry index attached.
std::vector<LabeledSample> label_dataset(std::span<const DatasetEntry> entries,
                                         const PixelCalibration& cal,
                                         LabelEstimator estimator = LabelEstimator::weighted_rms);

}  // namespace divctl
