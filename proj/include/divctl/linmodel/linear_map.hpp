#pragma once

#include <string>
#include <vector>

#include "divctl/core/frame.hpp"

namespace divctl {

DIVCTL_DEFINE_ERROR(DimensionMismatch, ValidationError);

// Which frame transform the weights were trained against.
//   base: raw frames as captured
//   hist: training frames histogram-matched (real-time frames unchanged)
//   norm: per-frame standardization on both training and real-time frames
enum class Preprocessing { base, hist, norm };

const char* to_string(Preprocessing p);
Preprocessing preprocessing_from_string(const std::string& s);

// The whole model: a per-pixel weight grid plus an intercept. Inference is
// one dot product with the (preprocessed) frame.
struct LinearMap {
    int width = 0;
    int height = 0;
    std::vector<double> weights;  // row-major, meters per intensity unit
    double bias = 0.0;            // meters
    Preprocessing preprocessing = Preprocessing::base;
    double ridge_lambda = 0.0;

    void validate() const;
};

double infer(const LinearMap& model, const Frame& frame);

// Text format:
//   LINMAP v1 <width> <height> <preprocessing> <lambda>
//   bias <value>
//   <height> rows of <width> weights
// 17-significant-digit decimals; load(save(m)) is bit exact.
void save_model(const std::string& path, const LinearMap& model);
LinearMap load_model(const std::string& path);

}  // namespace divctl
