#include "tiresense/io/trace_io.hpp"

#include <algorithm>
#include <cmath>

#include "json_util.hpp"
#include "tiresense/io/csv.hpp"
#include "tiresense/io/files.hpp"
#include "tiresense/io/schema.hpp"

namespace tiresense::io {
namespace {

using detail::Json;

const std::vector<std::string> kTraceHeader{"t", "a_tangential", "a_lateral", "a_radial"};

const std::initializer_list<std::string_view> kScenarioKeys{
    "unloaded_radius", "tread_depth",  "vertical_load",    "inflation_pressure", "slip_angle",
    "vehicle_speed",   "stiffness_c0", "stiffness_c1",     "wear_radius_gain",   "release_angle"};
const std::initializer_list<std::string_view> kSensorKeys{"sample_rate", "noise_std", "dc_bias", "seed"};

Json scenario_json(const sim::TireScenario& s) {
    Json j;
    j["unloaded_radius"] = s.unloaded_radius;
    j["tread_depth"] = s.tread_depth;
    j["vertical_load"] = s.vertical_load;
    j["inflation_pressure"] = s.inflation_pressure;
    j["slip_angle"] = s.slip_angle;
    j["vehicle_speed"] = s.vehicle_speed;
    j["stiffness_c0"] = s.stiffness_c0;
    j["stiffness_c1"] = s.stiffness_c1;
    j["wear_radius_gain"] = s.wear_radius_gain;
    j["release_angle"] = s.release_angle ? Json(*s.release_angle) : Json(nullptr);
    return j;
}

Json sensor_json(const sim::SensorSpec& s) {
    Json j;
    j["sample_rate"] = s.sample_rate;
    j["noise_std"] = s.noise_std;
    j["dc_bias"] = Json::array({s.dc_bias[0], s.dc_bias[1], s.dc_bias[2]});
    j["seed"] = s.seed;
    return j;
}

sim::TireScenario scenario_from(const Json& j, std::string_view what) {
    sim::TireScenario s;
    s.unloaded_radius = detail::number_or(j, "unloaded_radius", s.unloaded_radius, what);
    s.tread_depth = detail::number_or(j, "tread_depth", s.tread_depth, what);
    s.vertical_load = detail::number_or(j, "vertical_load", s.vertical_load, what);
    s.inflation_pressure = detail::number_or(j, "inflation_pressure", s.inflation_pressure, what);
    s.slip_angle = detail::number_or(j, "slip_angle", s.slip_angle, what);
    s.vehicle_speed = detail::number_or(j, "vehicle_speed", s.vehicle_speed, what);
    s.stiffness_c0 = detail::number_or(j, "stiffness_c0", s.stiffness_c0, what);
    s.stiffness_c1 = detail::number_or(j, "stiffness_c1", s.stiffness_c1, what);
    s.wear_radius_gain = detail::number_or(j, "wear_radius_gain", s.wear_radius_gain, what);
    if (j.contains("release_angle") && !j["release_angle"].is_null()) {
        s.release_angle = detail::number(j, "release_angle", what);
    }
    return s;
}

sim::SensorSpec sensor_from(const Json& j, std::string_view what) {
    sim::SensorSpec s;
    s.sample_rate = detail::number_or(j, "sample_rate", s.sample_rate, what);
    s.noise_std = detail::number_or(j, "noise_std", s.noise_std, what);
    if (j.contains("dc_bias")) {
        const Json& b = j["dc_bias"];
        if (!b.is_array() || b.size() != 3 || !std::all_of(b.begin(), b.end(), [](const Json& v) { return v.is_number(); })) {
            throw SchemaError(std::string(what) + ": dc_bias must be an array of 3 numbers");
        }
        for (std::size_t i = 0; i < 3; ++i) s.dc_bias[i] = b[i].get<double>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw SchemaError(std::string(what) + ": seed must be an unsigned integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    return s;
}

Json truth_json(const sim::GroundTruth& g) {
    Json turns = Json::array();
    for (const auto& t : g.turns) {
        Json r;
        r["deflection_mm"] = t.deflection_mm;
        r["patch_chord"] = t.patch_chord;
        r["patch_arc"] = t.patch_arc;
        r["contact_half_angle"] = t.contact_half_angle;
        r["peak_lateral_mm"] = t.peak_lateral_mm;
        r["lateral_slope"] = t.lateral_slope;
        r["turn_start_time"] = t.turn_start_time;
        r["wheel_period"] = t.wheel_period;
        r["patch_entry_time"] = t.patch_entry_time;
        r["patch_exit_time"] = t.patch_exit_time;
        turns.push_back(std::move(r));
    }
    Json j;
    j["effective_radius"] = g.effective_radius;
    j["turns"] = std::move(turns);
    return j;
}

sim::GroundTruth truth_from(const Json& j, std::string_view what) {
    detail::require_object(j, what);
    sim::GroundTruth g;
    g.effective_radius = detail::number(j, "effective_radius", what);
    const Json& turns = detail::field(j, "turns", what);
    if (!turns.is_array()) throw SchemaError(std::string(what) + ": ground_truth.turns must be an array");
    for (const Json& r : turns) {
        detail::require_object(r, what);
        sim::TurnTruth t;
        t.deflection_mm = detail::number(r, "deflection_mm", what);
        t.patch_chord = detail::number(r, "patch_chord", what);
        t.patch_arc = detail::number(r, "patch_arc", what);
        t.contact_half_angle = detail::number(r, "contact_half_angle", what);
        t.peak_lateral_mm = detail::number(r, "peak_lateral_mm", what);
        t.lateral_slope = detail::number(r, "lateral_slope", what);
        t.turn_start_time = detail::number(r, "turn_start_time", what);
        t.wheel_period = detail::number(r, "wheel_period", what);
        t.patch_entry_time = detail::number(r, "patch_entry_time", what);
        t.patch_exit_time = detail::number(r, "patch_exit_time", what);
        g.turns.push_back(t);
    }
    return g;
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
    constexpr std::string_view what = "scenario";
    const Json j = detail::parse_json(json_text, what);
    detail::require_object(j, what);
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        const bool known = k == "schema_version" ||
                           std::find(kScenarioKeys.begin(), kScenarioKeys.end(), k) != kScenarioKeys.end() ||
                           std::find(kSensorKeys.begin(), kSensorKeys.end(), k) != kSensorKeys.end();
        if (!known) throw SchemaError("scenario: unknown field '" + k + "'");
    }
    if (j.contains("schema_version")) detail::check_version(j, kScenarioSchema, what);

    ScenarioFile out{scenario_from(j, what), sensor_from(j, what)};
    out.scenario.validate();
    out.sensor.validate();
    return out;
}

ScenarioFile read_scenario(const std::filesystem::path& path) { return parse_scenario(read_text(path)); }

std::filesystem::path sidecar_path(const std::filesystem::path& trace_csv) {
    std::filesystem::path p = trace_csv;
    return p.replace_extension(".json");
}

std::string render_trace_csv(const sim::AccelTrace& trace) {
    std::string out = std::string("# ") + kTraceSchema + "\nt,a_tangential,a_lateral,a_radial\n";
    out.reserve(out.size() + trace.size() * 64);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        out += format_number(trace.time_at(i));
        out += ',';
        out += format_number(trace.tangential[i]);
        out += ',';
        out += format_number(trace.lateral[i]);
        out += ',';
        out += format_number(trace.radial[i]);
        out += '\n';
    }
    return out;
}

std::string render_sidecar(const TraceSidecar& sidecar) {
    Json j;
    j["schema_version"] = kSidecarSchema;
    j["trace_schema"] = kTraceSchema;
    j["scenario"] = scenario_json(sidecar.scenario);
    j["sensor"] = sensor_json(sidecar.sensor);
    j["n_turns"] = sidecar.n_turns;
    j["samples"] = sidecar.samples;
    j["duration"] = static_cast<double>(sidecar.samples) / sidecar.sensor.sample_rate;
    j["ground_truth"] = truth_json(sidecar.truth);
    return j.dump(2) + "\n";
}

void write_trace(const std::filesystem::path& trace_csv, const sim::Simulation& run, const sim::TireScenario& scenario,
                 const sim::SensorSpec& sensor, int n_turns) {
    const TraceSidecar sidecar{scenario, sensor, n_turns, run.trace.size(), run.truth};
    const std::string csv = render_trace_csv(run.trace);
    const std::string json = render_sidecar(sidecar);
    write_text(trace_csv, csv);
    write_text(sidecar_path(trace_csv), json);
}

sim::AccelTrace read_trace_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path, kTraceSchema, kTraceHeader);
    if (table.rows.size() < 2) throw SchemaError(path.string() + ": trace needs at least two samples");

    sim::AccelTrace trace;
    std::vector<double> t;
    t.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        t.push_back(parse_number(row[0]));
        trace.tangential.push_back(parse_number(row[1]));
        trace.lateral.push_back(parse_number(row[2]));
        trace.radial.push_back(parse_number(row[3]));
    }
    const double span = t.back() - t.front();
    if (!(span > 0.0)) throw SchemaError(path.string() + ": time column must increase");
    const double dt = span / static_cast<double>(t.size() - 1);
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (std::abs(t[i] - t[i - 1] - dt) > 1e-6 * dt + 1e-12) {
            throw SchemaError(path.string() + ": non-uniform sampling at row " + std::to_string(i + 1));
        }
    }
    // Times are written as i / fs, so the rate is recovered to well below 1 ppm.
    trace.sample_rate = std::round(1e6 / dt) / 1e6;
    trace.validate();
    return trace;
}

TraceSidecar read_sidecar(const std::filesystem::path& path) {
    const std::string what = path.string();
    const Json j = detail::parse_json(read_text(path), what);
    detail::require_object(j, what);
    detail::check_version(j, kSidecarSchema, what);
    detail::reject_unknown_keys(
        j, {"schema_version", "trace_schema", "scenario", "sensor", "n_turns", "samples", "duration", "ground_truth"},
        what);

    const Json& sc = detail::field(j, "scenario", what);
    detail::require_object(sc, what);
    detail::reject_unknown_keys(sc, kScenarioKeys, what + " scenario");
    const Json& se = detail::field(j, "sensor", what);
    detail::require_object(se, what);
    detail::reject_unknown_keys(se, kSensorKeys, what + " sensor");

    TraceSidecar s;
    s.scenario = scenario_from(sc, what);
    s.sensor = sensor_from(se, what);
    const Json& turns = detail::field(j, "n_turns", what);
    const Json& samples = detail::field(j, "samples", what);
    if (!turns.is_number_integer() || !samples.is_number_unsigned()) {
        throw SchemaError(what + ": n_turns and samples must be integers");
    }
    s.n_turns = turns.get<int>();
    s.samples = samples.get<std::size_t>();
    s.truth = truth_from(detail::field(j, "ground_truth", what), what);
    if (s.truth.turns.size() != static_cast<std::size_t>(std::max(0, s.n_turns))) {
        throw SchemaError(what + ": ground_truth turn count differs from n_turns");
    }
    return s;
}

std::vector<LoadedTrace> read_trace_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> csvs;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv" &&
            std::filesystem::exists(sidecar_path(entry.path()))) {
            csvs.push_back(entry.path());
        }
    }
    if (ec) throw IoError("cannot list " + dir.string());
    std::sort(csvs.begin(), csvs.end());

    std::vector<LoadedTrace> out;
    for (const auto& p : csvs) {
        LoadedTrace lt{p, read_trace_csv(p), read_sidecar(sidecar_path(p))};
        if (lt.trace.size() != lt.sidecar.samples) {
            throw SchemaError(p.string() + ": sample count differs from its sidecar");
        }
        lt.trace.sample_rate = lt.sidecar.sensor.sample_rate;
        out.push_back(std::move(lt));
    }
    return out;
}

}  // namespace tiresense::io
