#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiresense/io/tables.hpp"
#include "tiresense/io/trace_io.hpp"

namespace tiresense::cli {

struct ErrorStats {
    std::size_t count = 0;
    double mean = 0.0;  ///< mean of |error|
    double rms = 0.0;
    double max = 0.0;   ///< max of |error|
};

ErrorStats error_stats(const std::vector<double>& errors);

struct InputDigest {
    std::string name;
    std::string fnv1a;
};

struct RunReport {
    std::size_t turns = 0;
    std::size_t valid_turns = 0;
    std::size_t skipped_turns = 0;

    double true_load = 0.0;                      ///< lbf
    std::optional<double> final_load;            ///< lbf
    std::optional<double> final_relative_error;  ///< fraction
    std::optional<std::size_t> convergence_turn; ///< 1-based
    ErrorStats load_relative_error;              ///< running estimate, from convergence onward

    double true_slip = 0.0;   ///< deg
    ErrorStats slip_error;    ///< deg, valid turns with a prediction

    std::vector<InputDigest> inputs;
};

/// Compares estimate rows with the sidecar truth. Throws ValidationError when
/// the row count differs from the number of true turns.
RunReport evaluate(const std::vector<io::EstimateRow>& rows, const io::TraceSidecar& truth);

std::string render_report(const RunReport& report);

/// Per-turn estimate and truth series.
std::vector<io::PlotPoint> estimate_plot(const std::vector<io::EstimateRow>& rows, const io::TraceSidecar& truth);

}  // namespace tiresense::cli
