#pragma once

#include <string_view>

namespace wwspdc {

inline constexpr std::string_view kVersion = "0.1.0";

// Bumped whenever the CSV column layout of a tool subcommand changes.
inline constexpr int kCsvSchemaVersion = 1;

}  // namespace wwspdc
