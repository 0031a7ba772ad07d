#pragma once

#include <string>

namespace twostep::io {

/// Shortest round-trip decimal representation; keeps CSV output byte-stable
/// across runs and platforms.
std::string format_double(double value);

/// Writes content to path atomically enough for our purposes; throws IoError.
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace twostep::io
