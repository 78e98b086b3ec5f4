#include "divctl/labeling/labeling.hpp"

#include <cmath>

#include "divctl/core/numeric.hpp"

namespace divctl {

const char* to_string(LabelEstimator e) {
    return e == LabelEstimator::weighted_rms ? "weighted_rms" : "weighted_mean";
}

LabelEstimator label_estimator_from_string(const std::string& s) {
    if (s == "weighted_rms") return LabelEstimator::weighted_rms;
    if (s == "weighted_mean") return LabelEstimator::weighted_mean;
    throw ValidationError("unknown label estimator '" + s + "'");
}

double label_emission_height(const Frame& frame, const PixelCalibration& cal,
                             const GeometryState& geom, LabelEstimator estimator) {
    if (frame.kind() != FrameKind::inverted_emissivity)
        throw ValidationError("labeling expects an inverted_emissivity frame");
    const int j_x = xpoint_column(cal, geom.r_x);
    if (j_x < 0 || j_x >= frame.width())
        throw XPointOffFrame("x-point column " + std::to_string(j_x) +
                             " outside frame width " + std::to_string(frame.width()));

    const int n_rows = frame.height();
    const int n_out = frame.width() - j_x;
    std::vector<double> row_sums(static_cast<std::size_t>(n_rows));
    const double* px = frame.pixels().data();
    bool any_positive = false;
    for (int i = 0; i < n_rows; ++i) {
        const double* row = px + static_cast<std::size_t>(i) * frame.width() + j_x;
        const double s = num::sum_pairwise(row, static_cast<std::size_t>(n_out));
        row_sums[static_cast<std::size_t>(i)] = s;
        if (s > 0.0) any_positive = true;
    }
    if (!any_positive)
        throw AllZeroOutboard("no emission at or outboard of x-point column " +
                              std::to_string(j_x));

    double row_bar = 0.0;
    if (estimator == LabelEstimator::weighted_rms) {
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n_rows; ++i) {
            const double s = row_sums[static_cast<std::size_t>(i)];
            const double is = static_cast<double>(i) * s;
            num += is * is;
            den += s * s;
        }
        row_bar = std::sqrt(num / den);
    } else {
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n_rows; ++i) {
            const double s = row_sums[static_cast<std::size_t>(i)];
            num += static_cast<double>(i) * s;
            den += s;
        }
        row_bar = num / den;
    }
    return pixel_to_physical(cal, row_bar, 0.0).z;
}

std::vector<LabeledSample> label_dataset(std::span<const DatasetEntry> entries,
                                         const PixelCalibration& cal,
                                         LabelEstimator estimator) {
    std::vector<LabeledSample> out;
    out.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const DatasetEntry& e = entries[k];
        if (e.inverted.width() != entries[0].inverted.width() ||
            e.inverted.height() != entries[0].inverted.height())
            throw ValidationError("frame " + std::to_string(k) +
                                  ": dimensions differ from the first entry");
        const std::string tag = "frame " + std::to_string(k) + ": ";
        double z = 0.0;
        try {
            z = label_emission_height(e.inverted, cal, e.geometry, estimator);
        } catch (const AllZeroOutboard& ex) {
            throw AllZeroOutboard(tag + ex.what());
        } catch (const XPointOffFrame& ex) {
            throw XPointOffFrame(tag + ex.what());
        } catch (const Error& ex) {
            throw Error(tag + ex.what());
        }
        const double upper = e.geometry.z_x + 0.5 * e.geometry.leg_length();
        if (z < e.geometry.z_s || z > upper)
            throw ValidationError(tag + "label " + std::to_string(z) +
                                  " outside [strike point, x-point + half leg]");
        out.push_back(LabeledSample{e.camera, z, e.geometry});
    }
    return out;
}

}  // namespace divctl
