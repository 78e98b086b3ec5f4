#include "divctl/core/numeric.hpp"

#include <cmath>

namespace divctl::num {

namespace {
constexpr std::size_t kLeaf = 1024;
}

double sum_pairwise(const double* a, std::size_t n) {
    if (n <= kLeaf) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a[i];
        return s;
    }
    const std::size_t half = n / 2;
    return sum_pairwise(a, half) + sum_pairwise(a + half, n - half);
}

double dot_pairwise(const double* a, const double* b, std::size_t n) {
    if (n <= kLeaf) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
        return s;
    }
    const std::size_t half = n / 2;
    return dot_pairwise(a, b, half) + dot_pairwise(a + half, b + half, n - half);
}

MeanVar mean_variance(std::span<const double> a) {
    MeanVar mv;
    if (a.empty()) return mv;
    mv.mean = sum_pairwise(a) / static_cast<double>(a.size());
    double acc = 0.0;
    std::size_t i = 0;
    const std::size_t n = a.size();
    // blocked second pass; block sums added pairwise via recursion on tails
    double block = 0.0;
    std::size_t in_block = 0;
    for (; i < n; ++i) {
        const double d = a[i] - mv.mean;
        block += d * d;
        if (++in_block == kLeaf) {
            acc += block;
            block = 0.0;
            in_block = 0;
        }
    }
    acc += block;
    mv.var = acc / static_cast<double>(n);
    return mv;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size() < y.size() ? x.size() : y.size();
    if (n < 2) return 0.0;
    const MeanVar mx = mean_variance(x.subspan(0, n));
    const MeanVar my = mean_variance(y.subspan(0, n));
    if (mx.var <= 0.0 || my.var <= 0.0) return 0.0;
    double cov = 0.0;
    for (std::size_t i = 0; i < n; ++i) cov += (x[i] - mx.mean) * (y[i] - my.mean);
    cov /= static_cast<double>(n);
    return cov / std::sqrt(mx.var * my.var);
}

}  // namespace divctl::num
