#include "divctl/core/frame.hpp"

#include <cmath>

namespace divctl {

const char* to_string(FrameKind kind) {
    switch (kind) {
        case FrameKind::raw_camera: return "raw_camera";
        case FrameKind::inverted_emissivity: return "inverted_emissivity";
        case FrameKind::standardized: return "standardized";
    }
    return "unknown";
}

FrameKind frame_kind_from_string(const std::string& s) {
    if (s == "raw_camera") return FrameKind::raw_camera;
    if (s == "inverted_emissivity") return FrameKind::inverted_emissivity;
    if (s == "standardized") return FrameKind::standardized;
    throw ValidationError("unknown frame kind '" + s + "'");
}

Frame::Frame(int width, int height, FrameKind kind, double fill)
    : width_(width), height_(height), kind_(kind) {
    if (width <= 0 || height <= 0)
        throw ValidationError("frame dimensions must be positive");
    data_.assign(static_cast<std::size_t>(width) * height, fill);
}

Frame::Frame(int width, int height, FrameKind kind, std::vector<double> data)
    : width_(width), height_(height), kind_(kind), data_(std::move(data)) {
    if (width <= 0 || height <= 0)
        throw ValidationError("frame dimensions must be positive");
    if (data_.size() != static_cast<std::size_t>(width) * height)
        throw ValidationError("frame data size does not match width*height");
}

void Frame::validate() const {
    const bool raw = kind_ != FrameKind::standardized;
    for (double v : data_) {
        if (!std::isfinite(v))
            throw ValidationError("frame contains a non-finite intensity");
        if (raw && v < 0.0)
            throw ValidationError("raw frame contains a negative intensity");
    }
}

void PixelCalibration::validate() const {
    if (dz == 0.0 || dr == 0.0)
        throw ValidationError("pixel calibration steps dz, dr must be nonzero");
    if (!std::isfinite(z0) || !std::isfinite(dz) || !std::isfinite(r0) || !std::isfinite(dr))
        throw ValidationError("pixel calibration must be finite");
}

void GeometryState::validate() const {
    if (!(z_x > z_s))
        throw ValidationError("geometry requires z_x > z_s");
    if (!std::isfinite(r_x) || !std::isfinite(z_x) || !std::isfinite(z_s))
        throw ValidationError("geometry must be finite");
}

RZ pixel_to_physical(const PixelCalibration& cal, double row, double col) {
    return {cal.r0 + col * cal.dr, cal.z0 + row * cal.dz};
}

PixelPos physical_to_pixel(const PixelCalibration& cal, double r, double z) {
    return {(z - cal.z0) / cal.dz, (r - cal.r0) / cal.dr};
}

int xpoint_column(const PixelCalibration& cal, double r_x) {
    const double col = (r_x - cal.r0) / cal.dr;
    // outboard = direction of increasing R = increasing col iff dr > 0
    const double rounded = cal.dr > 0.0 ? std::floor(col + 0.5) : std::ceil(col - 0.5);
    return static_cast<int>(rounded);
}

}  // namespace divctl
