#pragma once

#include <iosfwd>
#include <string>

#include "divctl/core/frame.hpp"

namespace divctl {

// Text format, one frame per file:
//   FRAME v1 <width> <height> <kind>
//   <height> lines of <width> space-separated intensities
// Values are printed with 17 significant digits so the decimal round trip
// is bit exact.
void write_frame(std::ostream& out, const Frame& frame);
void write_frame(const std::string& path, const Frame& frame);

Frame read_frame(std::istream& in, const std::string& origin = "<stream>");
Frame read_frame(const std::string& path);

// Shared helper: shortest decimal that round-trips a double exactly.
std::string format_double(double v);

}  // namespace divctl
