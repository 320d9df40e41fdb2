#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tiresense/features/pipeline.hpp"

namespace tiresense::io {

/// One row of the estimates table. `turn` is 1-based.
struct EstimateRow {
    std::size_t turn = 0;
    std::optional<double> load;  ///< running load estimate, lbf
    std::optional<double> slip;  ///< per-turn slip prediction, deg
    bool valid = false;          ///< turn produced features
};

std::string render_estimates(const std::vector<EstimateRow>& rows);
std::vector<EstimateRow> read_estimates(const std::filesystem::path& path);

/// Feature table of analysed turns; rejected turns have empty feature cells.
std::string render_features(const features::TraceAnalysis& analysis);

/// Long-format plot data.
struct PlotPoint {
    std::string series;
    double x = 0.0;
    double y = 0.0;
};

std::string render_plot_data(const std::vector<PlotPoint>& points);

}  // namespace tiresense::io
