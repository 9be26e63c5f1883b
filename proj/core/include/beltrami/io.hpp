#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "beltrami/errors.hpp"

namespace beltrami {

/// Shortest round-trip decimal representation (17 significant digits max).
std::string format_double(double v);

/// FNV-1a 64-bit hash, hex-encoded; used as the config fingerprint in
/// output metadata blocks.
std::string fnv1a_hex(std::string_view text);

struct FieldRow {
    double x, y, B1, B2, B3;
};

/// CSV layout: '#'-prefixed metadata lines, a fixed "x,y,B1,B2,B3" header
/// row, then one row per sample.
void write_field_csv(const std::filesystem::path& path,
                     const std::vector<std::pair<std::string, std::string>>& meta,
                     const std::vector<FieldRow>& rows);

std::vector<FieldRow> read_field_csv(const std::filesystem::path& path);

} // namespace beltrami
