#include "tiresense/io/tables.hpp"

#include "tiresense/error.hpp"
#include "tiresense/io/csv.hpp"
#include "tiresense/io/schema.hpp"

namespace tiresense::io {
namespace {

const std::vector<std::string> kEstimatesHeader{"turn", "load_lbf", "slip_deg", "valid"};
const std::vector<std::string> kFeaturesHeader{"turn", "patch_length_m", "peak_radial_mm", "peak_lateral_mm",
                                               "lateral_slope"};

}  // namespace

std::string render_estimates(const std::vector<EstimateRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.turn), format_optional(r.load), format_optional(r.slip), r.valid ? "1" : "0"});
    }
    return render_csv(kEstimatesSchema, kEstimatesHeader, cells);
}

std::vector<EstimateRow> read_estimates(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path, kEstimatesSchema, kEstimatesHeader);
    std::vector<EstimateRow> rows;
    rows.reserve(table.rows.size());
    for (const auto& c : table.rows) {
        EstimateRow r;
        const double turn = parse_number(c[0]);
        if (!(turn >= 1.0) || turn != static_cast<double>(static_cast<std::size_t>(turn))) {
            throw SchemaError(path.string() + ": turn must be a positive integer");
        }
        r.turn = static_cast<std::size_t>(turn);
        r.load = parse_optional(c[1]);
        r.slip = parse_optional(c[2]);
        if (c[3] != "0" && c[3] != "1") throw SchemaError(path.string() + ": valid must be 0 or 1");
        r.valid = c[3] == "1";
        rows.push_back(r);
    }
    return rows;
}

std::string render_features(const features::TraceAnalysis& analysis) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(analysis.turns.size());
    for (const auto& t : analysis.turns) {
        std::vector<std::string> row{std::to_string(t.turn_index + 1)};
        if (t.features) {
            const auto& f = *t.features;
            row.push_back(format_number(f.patch_length));
            row.push_back(format_number(f.peak_radial_displacement));
            row.push_back(format_number(f.peak_lateral_displacement));
            row.push_back(format_number(f.lateral_slope));
        } else {
            row.resize(kFeaturesHeader.size());
        }
        cells.push_back(std::move(row));
    }
    return render_csv(kFeaturesSchema, kFeaturesHeader, cells);
}

std::string render_plot_data(const std::vector<PlotPoint>& points) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(points.size());
    for (const auto& p : points) {
        if (p.series.find_first_of(",\n\r") != std::string::npos) {
            throw ValidationError("plot series name contains a separator: " + p.series);
        }
        cells.push_back({p.series, format_number(p.x), format_number(p.y)});
    }
    return render_csv(kPlotSchema, {"series", "x", "y"}, cells);
}

}  // namespace tiresense::io
