#include "divctl/core/frame_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace divctl {

namespace {
constexpr long long kMaxPixels = 100'000'000;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_frame(std::ostream& out, const Frame& frame) {
    out << "FRAME v1 " << frame.width() << ' ' << frame.height() << ' '
        << to_string(frame.kind()) << '\n';
    char buf[40];
    for (int i = 0; i < frame.height(); ++i) {
        for (int j = 0; j < frame.width(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", frame.at(i, j));
            if (j) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

void write_frame(const std::string& path, const Frame& frame) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_frame(out, frame);
    if (!out) throw IoError("write failed for '" + path + "'");
}

Frame read_frame(std::istream& in, const std::string& origin) {
    std::string magic, version, kind_str;
    long long w = 0, h = 0;
    if (!(in >> magic >> version >> w >> h >> kind_str))
        throw ValidationError(origin + ": malformed frame header");
    if (magic != "FRAME" || version != "v1")
        throw ValidationError(origin + ": expected 'FRAME v1' header");
    if (w <= 0 || h <= 0 || w * h > kMaxPixels)
        throw ValidationError(origin + ": frame dimensions out of range");
    const FrameKind kind = frame_kind_from_string(kind_str);

    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(w * h));
    double v = 0.0;
    for (long long k = 0; k < w * h; ++k) {
        if (!(in >> v))
            throw ValidationError(origin + ": truncated frame data (expected " +
                                  std::to_string(w * h) + " values, got " +
                                  std::to_string(k) + ")");
        data.push_back(v);
    }
    Frame frame(static_cast<int>(w), static_cast<int>(h), kind, std::move(data));
    frame.validate();
    return frame;
}

Frame read_frame(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open frame file '" + path + "'");
    return read_frame(in, path);
}

}  // namespace divctl
