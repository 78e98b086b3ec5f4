#include "divctl/preprocess/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "divctl/core/frame_io.hpp"

namespace divctl {

std::uint64_t IntensityHistogram::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : counts) t += c;
    return t;
}

int IntensityHistogram::bin_of(double v) const {
    const double x = (v - lo) / (hi - lo) * kBins;
    int b = static_cast<int>(std::floor(x));
    return std::clamp(b, 0, kBins - 1);
}

double IntensityHistogram::bin_center(int bin) const {
    return lo + (static_cast<double>(bin) + 0.5) * (hi - lo) / kBins;
}

IntensityHistogram build_histogram(std::span<const Frame> frames) {
    if (frames.empty()) throw EmptyInput("build_histogram requires at least one frame");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Frame& f : frames) {
        for (double v : f.pixels()) {
            if (!std::isfinite(v)) throw ValidationError("non-finite intensity in histogram input");
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    IntensityHistogram hist;
    hist.lo = lo;
    hist.hi = hi > lo ? hi : lo + 1.0;  // widen degenerate range
    for (const Frame& f : frames) accumulate_histogram(hist, f);
    return hist;
}

void accumulate_histogram(IntensityHistogram& hist, const Frame& frame) {
    for (double v : frame.pixels()) ++hist.counts[static_cast<std::size_t>(hist.bin_of(v))];
}

Frame histogram_match(const Frame& frame, const IntensityHistogram& reference) {
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : frame.pixels()) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    if (!(mx > mn)) throw DegenerateFrame("histogram_match requires max > min intensity");

    IntensityHistogram src;
    src.lo = mn;
    src.hi = mx;
    accumulate_histogram(src, frame);

    // cumulative distributions evaluated at (inclusive) bin upper edges
    std::array<double, IntensityHistogram::kBins> src_cdf{}, ref_cdf{};
    const double src_total = static_cast<double>(src.total());
    const double ref_total = static_cast<double>(reference.total());
    if (ref_total == 0.0) throw EmptyInput("reference histogram is empty");
    double acc = 0.0;
    for (int b = 0; b < IntensityHistogram::kBins; ++b) {
        acc += static_cast<double>(src.counts[static_cast<std::size_t>(b)]);
        src_cdf[static_cast<std::size_t>(b)] = acc / src_total;
    }
    acc = 0.0;
    for (int b = 0; b < IntensityHistogram::kBins; ++b) {
        acc += static_cast<double>(reference.counts[static_cast<std::size_t>(b)]);
        ref_cdf[static_cast<std::size_t>(b)] = acc / ref_total;
    }

    // per-source-bin mapping to the reference quantile (bin center)
    std::array<double, IntensityHistogram::kBins> mapped{};
    int j = 0;
    for (int b = 0; b < IntensityHistogram::kBins; ++b) {
        const double u = src_cdf[static_cast<std::size_t>(b)] - 1e-15;
        while (j < IntensityHistogram::kBins - 1 && ref_cdf[static_cast<std::size_t>(j)] < u) ++j;
        mapped[static_cast<std::size_t>(b)] = reference.bin_center(j);
    }

    Frame out(frame.width(), frame.height(), FrameKind::raw_camera);
    std::span<const double> in_px = frame.pixels();
    std::span<double> out_px = out.pixels();
    for (std::size_t i = 0; i < in_px.size(); ++i)
        out_px[i] = mapped[static_cast<std::size_t>(src.bin_of(in_px[i]))];
    return out;
}

void save_histogram(const std::string& path, const IntensityHistogram& hist) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open histogram file '" + path + "' for writing");
    out << "# HIST v1 lo=" << format_double(hist.lo) << " hi=" << format_double(hist.hi) << '\n';
    out << "bin_index,count\n";
    for (int b = 0; b < IntensityHistogram::kBins; ++b)
        out << b << ',' << hist.counts[static_cast<std::size_t>(b)] << '\n';
    if (!out) throw IoError("write failed for histogram '" + path + "'");
}

IntensityHistogram load_histogram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open histogram file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ValidationError(path + ": empty histogram file");
    IntensityHistogram hist;
    {
        std::stringstream ss(line);
        std::string hash, tag, ver, lo_kv, hi_kv;
        ss >> hash >> tag >> ver >> lo_kv >> hi_kv;
        if (hash != "#" || tag != "HIST" || ver != "v1" || lo_kv.rfind("lo=", 0) != 0 ||
            hi_kv.rfind("hi=", 0) != 0)
            throw ValidationError(path + ": expected '# HIST v1 lo=.. hi=..' header");
        hist.lo = std::stod(lo_kv.substr(3));
        hist.hi = std::stod(hi_kv.substr(3));
    }
    if (!(hist.hi > hist.lo)) throw ValidationError(path + ": histogram range must satisfy hi > lo");
    if (!std::getline(in, line) || line != "bin_index,count")
        throw ValidationError(path + ": bad histogram column header");
    for (int b = 0; b < IntensityHistogram::kBins; ++b) {
        if (!std::getline(in, line))
            throw ValidationError(path + ": truncated histogram (bin " + std::to_string(b) + ")");
        std::stringstream ss(line);
        std::string idx, cnt;
        if (!std::getline(ss, idx, ',') || !std::getline(ss, cnt, ',') || std::stoi(idx) != b)
            throw ValidationError(path + ": bad histogram row '" + line + "'");
        hist.counts[static_cast<std::size_t>(b)] = std::stoull(cnt);
    }
    return hist;
}

}  // namespace divctl
