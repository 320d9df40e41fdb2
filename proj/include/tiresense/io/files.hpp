#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace tiresense::io {

std::string read_text(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place, so a failed
/// run never leaves a partial output behind. Missing parent directories are created.
void write_text(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit hash, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string file_digest(const std::filesystem::path& path);

}  // namespace tiresense::io
