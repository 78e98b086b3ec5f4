#pragma once

#include <string>
#include <vector>

#include "divctl/core/frame.hpp"

namespace divctl {

// One row of a dataset manifest. frame_path is stored relative to the
// manifest file and resolved against its directory on load.
struct ManifestEntry {
    std::string frame_path;
    double z_e_label = 0.0;
    GeometryState geometry;
};

// CSV: header `frame_path,z_e_label_m,r_x_m,z_x_m,z_s_m` after a `# MANIFEST v1` line.
void write_manifest(const std::string& path, const std::vector<ManifestEntry>& entries);
std::vector<ManifestEntry> read_manifest(const std::string& path);

}  // namespace divctl
