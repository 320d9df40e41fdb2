#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "tiresense/sim/simulator.hpp"

namespace tiresense::io {

struct ScenarioFile {
    sim::TireScenario scenario;
    sim::SensorSpec sensor;
};

/// Flat JSON object of TireScenario and SensorSpec fields. Missing fields keep
/// their defaults; unknown fields raise SchemaError. "schema_version" is optional.
ScenarioFile read_scenario(const std::filesystem::path& path);
ScenarioFile parse_scenario(const std::string& json_text);

/// Everything the JSON sidecar of a trace carries.
struct TraceSidecar {
    sim::TireScenario scenario;
    sim::SensorSpec sensor;
    int n_turns = 0;
    std::size_t samples = 0;
    sim::GroundTruth truth;
};

std::filesystem::path sidecar_path(const std::filesystem::path& trace_csv);

std::string render_trace_csv(const sim::AccelTrace& trace);
std::string render_sidecar(const TraceSidecar& sidecar);

/// Writes `trace_csv` and its sidecar next to it.
void write_trace(const std::filesystem::path& trace_csv, const sim::Simulation& run, const sim::TireScenario& scenario,
                 const sim::SensorSpec& sensor, int n_turns);

/// Reads a trace CSV. The sample rate comes from the time column.
sim::AccelTrace read_trace_csv(const std::filesystem::path& path);
TraceSidecar read_sidecar(const std::filesystem::path& path);

struct LoadedTrace {
    std::filesystem::path path;
    sim::AccelTrace trace;
    TraceSidecar sidecar;
};

/// Every *.csv trace in `dir` (sorted by name) that has a sidecar.
std::vector<LoadedTrace> read_trace_directory(const std::filesystem::path& dir);

}  // namespace tiresense::io
