#pragma once

#include "sharp/configuration.hpp"

#include <filesystem>
#include <string>

namespace sharp {

/// {"name": ..., "dim": d, "points": [[...], ...]}, one point per line,
/// every coordinate written with 17 significant digits.
std::string to_config_json(const PointConfiguration& cfg);

/// Parses the format written by to_config_json. Throws ParseError carrying
/// the offending line for syntax errors and for invalid points.
PointConfiguration parse_config_json(const std::string& text);

void save(const PointConfiguration& cfg, const std::filesystem::path& path);
PointConfiguration load(const std::filesystem::path& path);

} // namespace sharp
