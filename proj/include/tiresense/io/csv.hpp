#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tiresense::io {

/// Shortest round-trip decimal form; identical bytes for identical doubles.
std::string format_number(double x);

/// Empty cell for a missing value.
std::string format_optional(const std::optional<double>& x);

double parse_number(std::string_view cell);
std::optional<double> parse_optional(std::string_view cell);

std::vector<std::string_view> split_row(std::string_view line);

/// A CSV file with a "# <schema>" line followed by a header line.
struct CsvTable {
    std::string schema;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Reads `path`, checking the schema line and header exactly. Throws IoError
/// when the file cannot be opened and SchemaError on any mismatch.
CsvTable read_csv(const std::filesystem::path& path, std::string_view schema,
                  const std::vector<std::string>& header);

/// Serialises a table with "\n" line endings.
std::string render_csv(std::string_view schema, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

}  // namespace tiresense::io
