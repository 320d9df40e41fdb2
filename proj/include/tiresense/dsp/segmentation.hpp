#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tiresense/sim/tire_scenario.hpp"

namespace tiresense::dsp {

/// One revolution cut from a trace. The channel spans view the source trace,
/// which must outlive the segment.
struct WheelTurnSegment {
    std::size_t start_index = 0;
    std::size_t end_index = 0;  ///< exclusive
    double period = 0.0;        ///< s
    double wheel_speed_estimate = 0.0;  ///< rad/s
    std::span<const double> tangential;
    std::span<const double> lateral;
    std::span<const double> radial;

    std::size_t size() const { return end_index - start_index; }
};

/// Wheel period from the radial-channel autocorrelation peak within +-20% of
/// 2 pi radius_hint / speed_hint. Throws TooShortError below three expected
/// periods and NoPeakError when the window holds no local maximum.
double estimate_period(const sim::AccelTrace& trace, double speed_hint, double radius_hint);

/// Patch centres (fractional sample positions) from the smoothed radial channel.
/// Each centre is the midpoint of the half-depth crossings around a local minimum.
std::vector<double> find_patch_centers(const sim::AccelTrace& trace, double period);

/// Complete revolutions with boundaries midway between consecutive patch
/// centres. Throws TooShortError when no complete turn exists.
std::vector<WheelTurnSegment> segment_turns(const sim::AccelTrace& trace, double period);

}  // namespace tiresense::dsp
