#include "tiresense/cli/app.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiresense/cli/report.hpp"
#include "tiresense/cli/workflow.hpp"
#include "tiresense/error.hpp"
#include "tiresense/estimation/sensitivity.hpp"
#include "tiresense/io/files.hpp"
#include "tiresense/io/schema.hpp"

namespace tiresense::cli {
namespace {

using Json = nlohmann::ordered_json;

struct SimulateArgs {
    std::string scenario;
    int turns = 10;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<double> load, pressure, tread, slip;
};

struct CalibrateArgs {
    std::string traces;
    std::string out;
    double reference_pressure = 32.0;
    double reference_tread = 8.0;
};

struct EstimateArgs {
    std::string trace;
    std::string load_model;
    std::string slip_model;
    double lambda = estimation::kDefaultForgettingFactor;
    double p0 = estimation::kDefaultInitialCovariance;
    std::optional<double> pressure, speed, radius_hint;
    std::string out;
    std::string features;
    std::string plot_data;
};

struct EvaluateArgs {
    std::string estimates;
    std::string truth;
    std::string report;
    std::string plot_data;
};

struct SweepArgs {
    std::string ranges;
    std::string out;
    std::string plot_data;
    std::optional<std::uint64_t> seed;
};

void write_plot(const std::string& path, const std::vector<io::PlotPoint>& points) {
    if (!path.empty()) io::write_text(path, io::render_plot_data(points));
}

int do_simulate(const SimulateArgs& a, std::ostream& out) {
    io::ScenarioFile f = io::read_scenario(a.scenario);
    if (a.seed) f.sensor.seed = *a.seed;
    if (a.load) f.scenario.vertical_load = *a.load;
    if (a.pressure) f.scenario.inflation_pressure = *a.pressure;
    if (a.tread) f.scenario.tread_depth = *a.tread;
    if (a.slip) f.scenario.slip_angle = *a.slip;
    const sim::Simulation run = sim::simulate(f.scenario, f.sensor, a.turns);
    io::write_trace(a.out, run, f.scenario, f.sensor, a.turns);
    out << "wrote " << run.trace.size() << " samples (" << a.turns << " turns) to " << a.out << "\n";
    return 0;
}

int do_calibrate_load(const CalibrateArgs& a, std::ostream& out) {
    const auto traces = io::read_trace_directory(a.traces);
    const io::LoadModelFile model = calibrate_load(traces, {a.reference_pressure, a.reference_tread});
    io::write_text(a.out, io::render_load_model(model));
    out << "load model from " << traces.size() << " traces, residual rms " << model.surface.fit_residual_rms
        << " mm" << (model.patch ? "" : " (no patch baseline: fewer than two loads at the reference setting)")
        << "\n";
    return 0;
}

int do_calibrate_slip(const CalibrateArgs& a, std::ostream& out) {
    const auto traces = io::read_trace_directory(a.traces);
    const io::SlipModelFile model = calibrate_slip(traces);
    io::write_text(a.out, io::render_slip_model(model));
    out << "slip model from " << traces.size() << " traces, residual rms " << model.model.fit_residual_rms
        << " deg\n";
    return 0;
}

int do_estimate(const EstimateArgs& a, std::ostream& out) {
    const sim::AccelTrace trace_raw = io::read_trace_csv(a.trace);
    std::optional<io::TraceSidecar> sidecar;
    if (std::filesystem::exists(io::sidecar_path(a.trace))) sidecar = io::read_sidecar(io::sidecar_path(a.trace));

    sim::AccelTrace trace = trace_raw;
    if (sidecar) trace.sample_rate = sidecar->sensor.sample_rate;
    auto pick = [&](const std::optional<double>& flag, auto member, const char* name) {
        if (flag) return *flag;
        if (sidecar) return sidecar->scenario.*member;
        throw ValidationError(std::string("--") + name + " is required when the trace has no sidecar");
    };
    const double pressure = pick(a.pressure, &sim::TireScenario::inflation_pressure, "pressure");
    const double speed = pick(a.speed, &sim::TireScenario::vehicle_speed, "speed");
    const double radius = a.radius_hint.value_or(sidecar ? sidecar->scenario.unloaded_radius : sim::TireScenario{}.unloaded_radius);

    const io::LoadModelFile load_model = io::read_load_model(a.load_model);
    std::optional<estimation::SlipModel> slip_model;
    if (!a.slip_model.empty()) slip_model = io::read_slip_model(a.slip_model).model;

    const EstimateRun run =
        estimate_trace(trace, {speed, radius}, pressure, load_model.surface, slip_model, {a.lambda, a.p0});

    const std::string estimates = io::render_estimates(run.rows);
    const std::string features = a.features.empty() ? std::string() : io::render_features(run.analysis);
    const std::vector<io::PlotPoint> plot =
        a.plot_data.empty() ? std::vector<io::PlotPoint>() : displacement_plot(trace, run.analysis);
    io::write_text(a.out, estimates);
    if (!a.features.empty()) io::write_text(a.features, features);
    write_plot(a.plot_data, plot);

    out << run.rows.size() << " turns, " << run.load.skipped << " skipped";
    if (run.load.final_estimate) out << ", load " << *run.load.final_estimate << " lbf";
    if (run.load.convergence_turn) out << ", converged at turn " << *run.load.convergence_turn;
    out << "\n";
    return 0;
}

int do_evaluate(const EvaluateArgs& a, std::ostream& out) {
    const auto rows = io::read_estimates(a.estimates);
    const io::TraceSidecar truth = io::read_sidecar(a.truth);
    RunReport report = evaluate(rows, truth);
    report.inputs = {{std::filesystem::path(a.estimates).filename().string(), io::file_digest(a.estimates)},
                     {std::filesystem::path(a.truth).filename().string(), io::file_digest(a.truth)}};
    const std::string text = render_report(report);
    const std::vector<io::PlotPoint> plot = a.plot_data.empty() ? std::vector<io::PlotPoint>() : estimate_plot(rows, truth);
    io::write_text(a.report, text);
    write_plot(a.plot_data, plot);

    out << "load error " << (report.final_relative_error ? *report.final_relative_error * 100.0 : 0.0)
        << "%, convergence turn "
        << (report.convergence_turn ? std::to_string(*report.convergence_turn) : std::string("none")) << "\n";
    return 0;
}

estimation::Interval range_from(const Json& j, const char* key, const estimation::Interval& fallback) {
    if (!j.contains(key)) return fallback;
    const Json& v = j[key];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw SchemaError(std::string("sweep ranges: '") + key + "' must be [lo, hi]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

int int_from(const Json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw SchemaError(std::string("sweep ranges: '") + key + "' must be an integer");
    return j[key].get<int>();
}

estimation::SweepConfig parse_sweep_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("sweep ranges: malformed JSON (") + e.what() + ")");
    }
    if (!j.is_object()) throw SchemaError("sweep ranges: expected a JSON object");
    for (const auto& item : j.items()) {
        static const std::vector<std::string> keys{"schema_version", "load", "pressure", "tread", "points", "turns"};
        if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
            throw SchemaError("sweep ranges: unknown field '" + item.key() + "'");
        }
    }
    if (j.contains("schema_version") && j["schema_version"] != io::kSweepRangesSchema) {
        throw SchemaError(std::string("sweep ranges: schema_version must be '") + io::kSweepRangesSchema + "'");
    }
    estimation::SweepConfig c;
    c.load = range_from(j, "load", c.load);
    c.pressure = range_from(j, "pressure", c.pressure);
    c.tread = range_from(j, "tread", c.tread);
    c.points = int_from(j, "points", c.points);
    c.turns = int_from(j, "turns", c.turns);
    return c;
}

std::string render_sensitivity(const estimation::SensitivityReport& r) {
    Json j;
    j["schema_version"] = io::kSensitivitySchema;
    j["tool_version"] = io::kToolVersion;
    Json ranges;
    ranges["load_lbf"] = {r.config.load.lo, r.config.load.hi};
    ranges["pressure_psi"] = {r.config.pressure.lo, r.config.pressure.hi};
    ranges["tread_mm"] = {r.config.tread.lo, r.config.tread.hi};
    j["ranges"] = std::move(ranges);
    j["points"] = r.config.points;
    j["turns"] = r.config.turns;
    Json table;
    for (const auto& f : r.features) {
        Json row;
        for (estimation::Factor factor : estimation::kFactors) {
            const auto i = static_cast<std::size_t>(factor);
            row[estimation::to_string(factor)] = {{"share_percent", f.share[i]}, {"span", f.span[i]}};
        }
        table[estimation::to_string(f.feature)] = std::move(row);
    }
    j["sensitivity"] = std::move(table);
    Json pts = Json::array();
    for (const auto& p : r.points) {
        pts.push_back({{"factor", estimation::to_string(p.factor)},
                       {"value", p.value},
                       {"patch_length_m", p.patch_length},
                       {"peak_radial_mm", p.peak_radial}});
    }
    j["sweep"] = std::move(pts);
    return j.dump(2) + "\n";
}

int do_sweep(const SweepArgs& a, std::ostream& out) {
    estimation::SweepConfig config = parse_sweep_config(io::read_text(a.ranges));
    if (a.seed) config.sensor.seed = *a.seed;
    const estimation::SensitivityReport report = estimation::sensitivity_sweep(config);

    std::vector<io::PlotPoint> plot;
    for (const auto& p : report.points) {
        const std::string factor = estimation::to_string(p.factor);
        plot.push_back({"patch_length_m_vs_" + factor, p.value, p.patch_length});
        plot.push_back({"peak_radial_mm_vs_" + factor, p.value, p.peak_radial});
    }
    io::write_text(a.out, render_sensitivity(report));
    write_plot(a.plot_data, plot);

    for (const auto& f : report.features) {
        out << estimation::to_string(f.feature) << ":";
        for (estimation::Factor factor : estimation::kFactors) {
            out << " " << estimation::to_string(factor) << " " << f.share_of(factor) << "%";
        }
        out << "\n";
    }
    return 0;
}

std::string one_line(std::string msg) {
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    return msg;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tire load and slip-angle estimation from in-tire acceleration", "tiresense"};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::kToolVersion);

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Simulate a tri-axial trace and its ground truth");
    simulate->add_option("--scenario", sim_args.scenario, "Scenario JSON")->required();
    simulate->add_option("--turns", sim_args.turns, "Wheel turns to simulate")->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim_args.out, "Trace CSV; the sidecar goes next to it")->required();
    simulate->add_option("--seed", sim_args.seed, "Noise seed (overrides the scenario)");
    simulate->add_option("--load", sim_args.load, "Vertical load override, lbf");
    simulate->add_option("--pressure", sim_args.pressure, "Inflation pressure override, psi");
    simulate->add_option("--tread", sim_args.tread, "Tread depth override, mm");
    simulate->add_option("--slip", sim_args.slip, "Slip angle override, deg");

    CalibrateArgs load_args;
    auto* cal_load = app.add_subcommand("calibrate-load", "Fit the load surface and patch baseline");
    cal_load->add_option("--traces", load_args.traces, "Directory of traces with sidecars")->required();
    cal_load->add_option("--out", load_args.out, "Load model JSON")->required();
    cal_load->add_option("--reference-pressure", load_args.reference_pressure, "Patch baseline pressure, psi");
    cal_load->add_option("--reference-tread", load_args.reference_tread, "Patch baseline tread, mm");

    CalibrateArgs slip_args;
    auto* cal_slip = app.add_subcommand("calibrate-slip", "Fit the slip-angle regression");
    cal_slip->add_option("--traces", slip_args.traces, "Directory of traces with sidecars")->required();
    cal_slip->add_option("--out", slip_args.out, "Slip model JSON")->required();

    EstimateArgs est_args;
    auto* estimate = app.add_subcommand("estimate", "Per-turn load and slip estimates for one trace");
    estimate->add_option("--trace", est_args.trace, "Trace CSV")->required();
    estimate->add_option("--load-model", est_args.load_model, "Load model JSON")->required();
    estimate->add_option("--slip-model", est_args.slip_model, "Slip model JSON");
    estimate->add_option("--lambda", est_args.lambda, "RLS forgetting factor");
    estimate->add_option("--p0", est_args.p0, "RLS initial covariance");
    estimate->add_option("--pressure", est_args.pressure, "Inflation pressure, psi (default: sidecar)");
    estimate->add_option("--speed", est_args.speed, "Vehicle speed, m/s (default: sidecar)");
    estimate->add_option("--radius-hint", est_args.radius_hint, "Nominal tire radius, m (default: sidecar)");
    estimate->add_option("--out", est_args.out, "Estimates CSV")->required();
    estimate->add_option("--features", est_args.features, "Per-turn features CSV");
    estimate->add_option("--plot-data", est_args.plot_data, "Displacement profiles of the first valid turn");

    EvaluateArgs eval_args;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Compare estimates with ground truth");
    evaluate_cmd->add_option("--estimates", eval_args.estimates, "Estimates CSV")->required();
    evaluate_cmd->add_option("--truth", eval_args.truth, "Trace sidecar JSON")->required();
    evaluate_cmd->add_option("--report", eval_args.report, "Report JSON")->required();
    evaluate_cmd->add_option("--plot-data", eval_args.plot_data, "Per-turn estimate vs truth CSV");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "One-at-a-time feature sensitivity");
    sweep->add_option("--ranges", sweep_args.ranges, "Sweep ranges JSON")->required();
    sweep->add_option("--out", sweep_args.out, "Sensitivity JSON")->required();
    sweep->add_option("--plot-data", sweep_args.plot_data, "Feature vs factor CSV");
    sweep->add_option("--seed", sweep_args.seed, "Sensor seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << io::kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "tiresense: " << one_line(e.what()) << "\n";
        return 1;
    }

    try {
        if (simulate->parsed()) return do_simulate(sim_args, out);
        if (cal_load->parsed()) return do_calibrate_load(load_args, out);
        if (cal_slip->parsed()) return do_calibrate_slip(slip_args, out);
        if (estimate->parsed()) return do_estimate(est_args, out);
        if (evaluate_cmd->parsed()) return do_evaluate(eval_args, out);
        if (sweep->parsed()) return do_sweep(sweep_args, out);
    } catch (const IoError& e) {
        err << "tiresense: " << one_line(e.what()) << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "tiresense: " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "tiresense: " << one_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "tiresense: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 1;
}

}  // namespace tiresense::cli
