#pragma once

#include <cstddef>
#include <span>

namespace divctl::num {

// Pairwise (blocked) summation. Fixed split schedule, so results are
// reproducible regardless of caller threading.
double sum_pairwise(const double* a, std::size_t n);
double dot_pairwise(const double* a, const double* b, std::size_t n);

inline double sum_pairwise(std::span<const double> a) {
    return sum_pairwise(a.data(), a.size());
}
inline double dot_pairwise(std::span<const double> a, std::span<const double> b) {
    return dot_pairwise(a.data(), b.data(), a.size());
}

struct MeanVar {
    double mean = 0.0;
    double var = 0.0;  // population (divide-by-N)
};

// Two-pass mean/variance.
MeanVar mean_variance(std::span<const double> a);

// Pearson correlation coefficient; returns 0 when either series is constant.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace divctl::num
