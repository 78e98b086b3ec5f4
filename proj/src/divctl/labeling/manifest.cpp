#include "divctl/labeling/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "divctl/core/frame_io.hpp"

namespace divctl {

void write_manifest(const std::string& path, const std::vector<ManifestEntry>& entries) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open manifest '" + path + "' for writing");
    out << "# MANIFEST v1\n";
    out << "frame_path,z_e_label_m,r_x_m,z_x_m,z_s_m\n";
    for (const ManifestEntry& e : entries) {
        out << e.frame_path << ',' << format_double(e.z_e_label) << ','
            << format_double(e.geometry.r_x) << ',' << format_double(e.geometry.z_x) << ','
            << format_double(e.geometry.z_s) << '\n';
    }
    if (!out) throw IoError("write failed for manifest '" + path + "'");
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest '" + path + "'");
    const std::filesystem::path base = std::filesystem::path(path).parent_path();

    std::string line;
    if (!std::getline(in, line) || line != "# MANIFEST v1")
        throw ValidationError(path + ": expected '# MANIFEST v1' first line");
    if (!std::getline(in, line) || line != "frame_path,z_e_label_m,r_x_m,z_x_m,z_s_m")
        throw ValidationError(path + ": bad manifest header");

    std::vector<ManifestEntry> entries;
    std::size_t row = 2;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::stringstream ss(line);
        ManifestEntry e;
        std::string field;
        if (!std::getline(ss, e.frame_path, ','))
            throw ValidationError(path + ":" + std::to_string(row) + ": missing frame_path");
        double* nums[4] = {&e.z_e_label, &e.geometry.r_x, &e.geometry.z_x, &e.geometry.z_s};
        for (double* target : nums) {
            if (!std::getline(ss, field, ','))
                throw ValidationError(path + ":" + std::to_string(row) + ": truncated row");
            try {
                *target = std::stod(field);
            } catch (const std::exception&) {
                throw ValidationError(path + ":" + std::to_string(row) +
                                      ": bad number '" + field + "'");
            }
        }
        e.geometry.validate();
        e.frame_path = (base / e.frame_path).string();
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace divctl
