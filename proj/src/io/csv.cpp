#include "tiresense/io/csv.hpp"

#include <charconv>
#include <cmath>

#include "tiresense/error.hpp"
#include "tiresense/io/files.hpp"

namespace tiresense::io {

std::string format_number(double x) {
    if (!std::isfinite(x)) throw ValidationError("refusing to write a non-finite number");
    if (x == 0.0) x = 0.0;  // drop the sign of negative zero
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

double parse_number(std::string_view cell) {
    double v = 0.0;
    const auto* end = cell.data() + cell.size();
    const auto res = std::from_chars(cell.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
        throw SchemaError("not a finite number: '" + std::string(cell) + "'");
    }
    return v;
}

std::optional<double> parse_optional(std::string_view cell) {
    if (cell.empty()) return std::nullopt;
    return parse_number(cell);
}

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

CsvTable read_csv(const std::filesystem::path& path, std::string_view schema,
                  const std::vector<std::string>& header) {
    const std::string text = read_text(path);
    std::string_view rest = text;
    std::size_t line_no = 0;
    auto next_line = [&]() -> std::optional<std::string_view> {
        if (rest.empty()) return std::nullopt;
        const std::size_t nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        return line;
    };
    const std::string where = path.string();

    const auto first = next_line();
    if (!first || first->substr(0, 2) != "# ") throw SchemaError(where + ": missing '# <schema>' line");
    const std::string_view found = first->substr(2);
    if (found != schema) {
        throw SchemaError(where + ": schema '" + std::string(found) + "', expected '" + std::string(schema) + "'");
    }

    CsvTable table;
    table.schema = std::string(found);
    const auto head = next_line();
    if (!head) throw SchemaError(where + ": missing header");
    for (auto cell : split_row(*head)) table.header.emplace_back(cell);
    if (table.header != header) throw SchemaError(where + ": unexpected header '" + std::string(*head) + "'");

    while (const auto line = next_line()) {
        if (line->empty()) continue;
        const auto cells = split_row(*line);
        if (cells.size() != header.size()) {
            throw SchemaError(where + ":" + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                              " columns");
        }
        table.rows.emplace_back(cells.begin(), cells.end());
    }
    return table;
}

std::string render_csv(std::string_view schema, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::string out = "# ";
    out += schema;
    out += '\n';
    auto append_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    append_row(header);
    for (const auto& r : rows) append_row(r);
    return out;
}

}  // namespace tiresense::io
