#include "tiresense/features/pipeline.hpp"

#include <algorithm>

#include "tiresense/dsp/edges.hpp"
#include "tiresense/dsp/integration.hpp"
#include "tiresense/error.hpp"

namespace tiresense::features {

std::size_t TraceAnalysis::valid_count() const {
    return static_cast<std::size_t>(
        std::count_if(turns.begin(), turns.end(), [](const TurnResult& t) { return t.features.has_value(); }));
}

std::optional<FootprintFeatures> TraceAnalysis::mean_features() const {
    FootprintFeatures sum;
    std::size_t count = 0;
    for (const TurnResult& t : turns) {
        if (!t.features) continue;
        sum.patch_length += t.features->patch_length;
        sum.peak_radial_displacement += t.features->peak_radial_displacement;
        sum.peak_lateral_displacement += t.features->peak_lateral_displacement;
        sum.lateral_slope += t.features->lateral_slope;
        sum.wheel_speed += t.features->wheel_speed;
        ++count;
    }
    if (count == 0) return std::nullopt;
    const auto c = static_cast<double>(count);
    sum.patch_length /= c;
    sum.peak_radial_displacement /= c;
    sum.peak_lateral_displacement /= c;
    sum.lateral_slope /= c;
    sum.wheel_speed /= c;
    return sum;
}

TurnProfiles turn_profiles(const dsp::WheelTurnSegment& segment, double sample_rate) {
    TurnProfiles p;
    p.edges = dsp::detect_patch_edges(segment.tangential);
    const double rotation_frequency = 1.0 / segment.period;

    p.radial = dsp::accel_to_displacement(segment.radial, sample_rate, rotation_frequency, dsp::Axis::radial);
    // The sensor radial axis points at the wheel centre; report outward deflection
    // so the flattened patch shows up as a dip.
    for (double& v : p.radial.samples_mm) v = -v;
    p.radial.patch = p.edges;

    p.lateral = dsp::accel_to_displacement(segment.lateral, sample_rate, rotation_frequency, dsp::Axis::lateral);
    p.lateral.patch = p.edges;
    return p;
}

FootprintFeatures extract_turn_features(const dsp::WheelTurnSegment& segment, double sample_rate,
                                        double vehicle_speed, std::size_t turn_index) {
    const TurnProfiles p = turn_profiles(segment, sample_rate);
    FootprintFeatures f;
    f.turn_index = turn_index;
    f.wheel_speed = vehicle_speed;
    f.patch_length = patch_length(p.edges, vehicle_speed, sample_rate);
    f.peak_radial_displacement = peak_radial_displacement(p.radial);
    const LateralFeatures lat = lateral_features(p.lateral, p.edges, vehicle_speed, sample_rate);
    f.peak_lateral_displacement = lat.peak;
    f.lateral_slope = lat.slope;
    return f;
}

TraceAnalysis analyze_trace(const sim::AccelTrace& trace, const TraceContext& context) {
    trace.validate();
    if (!(context.vehicle_speed > 0.0)) throw ValidationError("vehicle speed must be > 0");
    TraceAnalysis out;
    out.period = dsp::estimate_period(trace, context.vehicle_speed, context.radius_hint);
    const auto segments = dsp::segment_turns(trace, out.period);
    out.turns.reserve(segments.size());
    for (std::size_t k = 0; k < segments.size(); ++k) {
        TurnResult r;
        r.turn_index = k;
        r.start_index = segments[k].start_index;
        r.end_index = segments[k].end_index;
        try {
            r.features = extract_turn_features(segments[k], trace.sample_rate, context.vehicle_speed, k);
        } catch (const EdgeOrderError& e) {
            r.reject_reason = e.what();
        }
        out.turns.push_back(std::move(r));
    }
    return out;
}

}  // namespace tiresense::features
