#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiresense/dsp/profile.hpp"
#include "tiresense/dsp/segmentation.hpp"
#include "tiresense/features/footprint.hpp"
#include "tiresense/sim/tire_scenario.hpp"

namespace tiresense::features {

/// What the on-board unit knows besides the accelerometer stream.
struct TraceContext {
    double vehicle_speed = 0.0;  ///< m/s, from the vehicle bus
    double radius_hint = 0.0;    ///< m, nominal tire radius for period search
};

struct TurnResult {
    std::size_t turn_index = 0;
    std::size_t start_index = 0;
    std::size_t end_index = 0;
    std::optional<FootprintFeatures> features;  ///< empty when the turn was rejected
    std::string reject_reason;
};

struct TraceAnalysis {
    double period = 0.0;  ///< s
    std::vector<TurnResult> turns;

    std::size_t valid_count() const;
    std::size_t skipped_count() const { return turns.size() - valid_count(); }
    /// Mean of every valid turn's features; empty when none are valid.
    std::optional<FootprintFeatures> mean_features() const;
};

/// Per-turn radial (outward deflection) and lateral displacement profiles.
struct TurnProfiles {
    dsp::PatchEdges edges;
    dsp::DisplacementProfile radial;
    dsp::DisplacementProfile lateral;
};

/// Edges plus both displacement profiles of one segment. Throws EdgeOrderError.
TurnProfiles turn_profiles(const dsp::WheelTurnSegment& segment, double sample_rate);

FootprintFeatures extract_turn_features(const dsp::WheelTurnSegment& segment, double sample_rate,
                                        double vehicle_speed, std::size_t turn_index);

/// Period estimation, segmentation and per-turn feature extraction. Turns whose
/// edges fail validation are kept with an empty feature slot.
TraceAnalysis analyze_trace(const sim::AccelTrace& trace, const TraceContext& context);

}  // namespace tiresense::features
