#include "tiresense/cli/workflow.hpp"

#include <cmath>
#include <set>

#include "tiresense/dsp/integration.hpp"
#include "tiresense/dsp/segmentation.hpp"
#include "tiresense/error.hpp"
#include "tiresense/estimation/patch_model.hpp"
#include "tiresense/estimation/slip_model.hpp"
#include "tiresense/units.hpp"

namespace tiresense::cli {
namespace {

constexpr double kSameSetting = 1e-9;

features::FootprintFeatures mean_features_of(const io::LoadedTrace& t) {
    const features::TraceAnalysis analysis = features::analyze_trace(t.trace, context_for(t.sidecar.scenario));
    const auto mean = analysis.mean_features();
    if (!mean) throw ValidationError(t.path.string() + ": no valid wheel turn");
    return *mean;
}

}  // namespace

features::TraceContext context_for(const sim::TireScenario& scenario) {
    return {scenario.vehicle_speed, scenario.unloaded_radius};
}

io::LoadModelFile calibrate_load(std::span<const io::LoadedTrace> traces, const CalibrationOptions& options) {
    if (traces.empty()) throw ValidationError("no calibration traces");
    std::vector<estimation::LoadSurfaceSample> surface;
    std::vector<estimation::PatchLoadSample> patch;
    std::set<double> patch_loads;
    for (const auto& t : traces) {
        const auto mean = mean_features_of(t);
        const auto& s = t.sidecar.scenario;
        surface.push_back({s.vertical_load, s.inflation_pressure, mean.peak_radial_displacement});
        if (std::abs(s.inflation_pressure - options.reference_pressure) < kSameSetting &&
            std::abs(s.tread_depth - options.reference_tread) < kSameSetting) {
            patch.push_back({s.vertical_load, mean.patch_length});
            patch_loads.insert(s.vertical_load);
        }
    }

    io::LoadModelFile out;
    out.surface = estimation::fit_load_surface(surface);
    if (patch_loads.size() >= 2) {
        out.patch = estimation::fit_patch_load_model(patch, options.reference_pressure, options.reference_tread);
    }
    out.calibration_traces = traces.size();
    return out;
}

io::SlipModelFile calibrate_slip(std::span<const io::LoadedTrace> traces) {
    if (traces.empty()) throw ValidationError("no calibration traces");
    std::vector<estimation::SlipSample> samples;
    for (const auto& t : traces) {
        const auto mean = mean_features_of(t);
        samples.push_back({mean.peak_lateral_displacement, mean.lateral_slope, t.sidecar.scenario.slip_angle});
    }
    return {estimation::fit_slip_model(samples), traces.size()};
}

EstimateRun estimate_trace(const sim::AccelTrace& trace, const features::TraceContext& context, double pressure,
                           const estimation::LoadSurfaceModel& load_model,
                           const std::optional<estimation::SlipModel>& slip_model, const EstimateOptions& options) {
    EstimateRun run;
    run.analysis = features::analyze_trace(trace, context);

    const std::size_t n = run.analysis.turns.size();
    std::vector<std::optional<double>> peaks(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (const auto& f = run.analysis.turns[k].features) peaks[k] = f->peak_radial_displacement;
    }
    const std::vector<double> pressures(n, pressure);
    run.load = estimation::estimate_load_stream(load_model, peaks, pressures, options.forgetting_factor,
                                                options.initial_covariance);

    run.rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        io::EstimateRow row;
        row.turn = k + 1;
        row.load = run.load.estimates[k];
        const auto& f = run.analysis.turns[k].features;
        row.valid = f.has_value();
        if (f && slip_model) row.slip = estimation::predict_slip(*slip_model, f->peak_lateral_displacement, f->lateral_slope);
        run.rows.push_back(row);
    }
    return run;
}

estimation::LoadStreamResult estimate_patch_stream(const features::TraceAnalysis& analysis,
                                                   const estimation::PatchLoadModel& model,
                                                   const EstimateOptions& options) {
    std::vector<std::optional<double>> loads;
    loads.reserve(analysis.turns.size());
    for (const auto& t : analysis.turns) {
        loads.push_back(t.features ? std::optional<double>(estimation::estimate_load_patch(model, t.features->patch_length).load)
                                   : std::nullopt);
    }
    return estimation::smooth_load_stream(loads, options.forgetting_factor, options.initial_covariance);
}

std::vector<io::PlotPoint> displacement_plot(const sim::AccelTrace& trace, const features::TraceAnalysis& analysis) {
    std::vector<io::PlotPoint> points;
    const auto segments = dsp::segment_turns(trace, analysis.period);
    for (std::size_t k = 0; k < analysis.turns.size() && k < segments.size(); ++k) {
        if (!analysis.turns[k].features) continue;
        const auto& seg = segments[k];
        const features::TurnProfiles p = features::turn_profiles(seg, trace.sample_rate);
        const std::vector<double> raw = dsp::integrate_unfiltered(seg.radial, trace.sample_rate);
        for (std::size_t i = 0; i < seg.size(); ++i) {
            const double t = static_cast<double>(i) / trace.sample_rate;
            points.push_back({"radial_displacement_filtered_mm", t, p.radial.samples_mm[i]});
            points.push_back({"radial_displacement_unfiltered_mm", t, -units::m_to_mm(raw[i])});
            points.push_back({"lateral_displacement_mm", t, p.lateral.samples_mm[i]});
        }
        break;
    }
    return points;
}

}  // namespace tiresense::cli
