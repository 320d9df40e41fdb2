#include "tiresense/cli/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "tiresense/error.hpp"
#include "tiresense/estimation/rls.hpp"
#include "tiresense/io/schema.hpp"

namespace tiresense::cli {
namespace {

using Json = nlohmann::ordered_json;

Json stats_json(const ErrorStats& s) {
    Json j;
    j["count"] = s.count;
    j["mean_abs"] = s.mean;
    j["rms"] = s.rms;
    j["max_abs"] = s.max;
    return j;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

ErrorStats error_stats(const std::vector<double>& errors) {
    ErrorStats s;
    s.count = errors.size();
    if (errors.empty()) return s;
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    for (double e : errors) {
        sum_abs += std::abs(e);
        sum_sq += e * e;
        s.max = std::max(s.max, std::abs(e));
    }
    const auto n = static_cast<double>(errors.size());
    s.mean = sum_abs / n;
    s.rms = std::sqrt(sum_sq / n);
    return s;
}

RunReport evaluate(const std::vector<io::EstimateRow>& rows, const io::TraceSidecar& truth) {
    if (rows.size() != truth.truth.turns.size()) {
        throw ValidationError("estimates have " + std::to_string(rows.size()) + " turns, truth has " +
                              std::to_string(truth.truth.turns.size()));
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].turn != k + 1) throw ValidationError("estimate turns must be numbered 1..N in order");
    }

    RunReport r;
    r.turns = rows.size();
    r.valid_turns = static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& x) { return x.valid; }));
    r.skipped_turns = r.turns - r.valid_turns;
    r.true_load = truth.scenario.vertical_load;
    r.true_slip = truth.scenario.slip_angle;

    std::vector<std::optional<double>> loads;
    for (const auto& row : rows) loads.push_back(row.load);
    r.convergence_turn = estimation::convergence_turn(loads);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (it->load) {
            r.final_load = it->load;
            break;
        }
    }
    if (r.final_load) r.final_relative_error = *r.final_load / r.true_load - 1.0;

    std::vector<double> load_errors;
    const std::size_t from = r.convergence_turn ? *r.convergence_turn - 1 : 0;
    for (std::size_t k = from; k < rows.size(); ++k) {
        if (rows[k].load) load_errors.push_back(*rows[k].load / r.true_load - 1.0);
    }
    r.load_relative_error = error_stats(load_errors);

    std::vector<double> slip_errors;
    for (const auto& row : rows) {
        if (row.valid && row.slip) slip_errors.push_back(*row.slip - r.true_slip);
    }
    r.slip_error = error_stats(slip_errors);
    return r;
}

std::string render_report(const RunReport& report) {
    Json j;
    j["schema_version"] = io::kReportSchema;
    j["tool_version"] = io::kToolVersion;
    Json inputs = Json::array();
    for (const auto& in : report.inputs) inputs.push_back({{"name", in.name}, {"fnv1a64", in.fnv1a}});
    j["inputs"] = std::move(inputs);
    j["turns"] = report.turns;
    j["valid_turns"] = report.valid_turns;
    j["skipped_turns"] = report.skipped_turns;

    Json load;
    load["true_lbf"] = report.true_load;
    load["final_estimate_lbf"] = optional_json(report.final_load);
    load["final_relative_error"] = optional_json(report.final_relative_error);
    load["convergence_turn"] = optional_json(report.convergence_turn);
    load["relative_error_after_convergence"] = stats_json(report.load_relative_error);
    j["load"] = std::move(load);

    Json slip;
    slip["true_deg"] = report.true_slip;
    slip["error_deg"] = stats_json(report.slip_error);
    j["slip"] = std::move(slip);
    return j.dump(2) + "\n";
}

std::vector<io::PlotPoint> estimate_plot(const std::vector<io::EstimateRow>& rows, const io::TraceSidecar& truth) {
    std::vector<io::PlotPoint> points;
    for (const auto& row : rows) {
        const auto x = static_cast<double>(row.turn);
        if (row.load) points.push_back({"load_estimate_lbf", x, *row.load});
        points.push_back({"load_true_lbf", x, truth.scenario.vertical_load});
        if (row.slip) points.push_back({"slip_estimate_deg", x, *row.slip});
        points.push_back({"slip_true_deg", x, truth.scenario.slip_angle});
    }
    return points;
}

}  // namespace tiresense::cli
