#pragma once

#include <span>
#include <string>
#include <vector>

#include "divctl/core/error.hpp"

namespace divctl {

enum class FrameKind { raw_camera, inverted_emissivity, standardized };

const char* to_string(FrameKind kind);
FrameKind frame_kind_from_string(const std::string& s);

// 2D intensity grid, row-major. Raw kinds (camera / inverted emissivity)
// hold non-negative detector counts; standardized frames are unrestricted.
class Frame {
public:
    Frame() = default;
    Frame(int width, int height, FrameKind kind, double fill = 0.0);
    Frame(int width, int height, FrameKind kind, std::vector<double> data);

    int width() const { return width_; }
    int height() const { return height_; }
    FrameKind kind() const { return kind_; }

    double at(int row, int col) const { return data_[static_cast<std::size_t>(row) * width_ + col]; }
    double& at(int row, int col) { return data_[static_cast<std::size_t>(row) * width_ + col]; }

    std::span<const double> pixels() const { return data_; }
    std::span<double> pixels() { return data_; }
    std::size_t pixel_count() const { return data_.size(); }

    // Checks the non-negativity invariant for raw kinds and finiteness for all.
    void validate() const;

private:
    int width_ = 0;
    int height_ = 0;
    FrameKind kind_ = FrameKind::raw_camera;
    std::vector<double> data_;
};

// Affine pixel<->physical mapping. Row 0 sits at height z0 and rows advance
// by dz per row (sign carries orientation); columns likewise for radius.
struct PixelCalibration {
    double z0 = 0.0;
    double dz = -0.005;
    double r0 = 1.0;
    double dr = 0.002;

    void validate() const;
};

// Equilibrium stand-in: X-point position and strike-point height, meters.
struct GeometryState {
    double r_x = 1.52;
    double z_x = -1.0;
    double z_s = -1.25;

    double leg_length() const { return z_x - z_s; }
    void validate() const;
};

struct RZ {
    double r = 0.0;
    double z = 0.0;
};

struct PixelPos {
    double row = 0.0;
    double col = 0.0;
};

RZ pixel_to_physical(const PixelCalibration& cal, double row, double col);
PixelPos physical_to_pixel(const PixelCalibration& cal, double r, double z);

// Nearest column to radius r_x; exact half-pixel ties round toward outboard
// (increasing R). May fall outside the frame; callers range-check.
int xpoint_column(const PixelCalibration& cal, double r_x);

}  // namespace divctl
