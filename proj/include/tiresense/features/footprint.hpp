#pragma once

#include <cstddef>

#include "tiresense/dsp/profile.hpp"

namespace tiresense::features {

/// Scalar footprint features of one wheel turn.
struct FootprintFeatures {
    std::size_t turn_index = 0;
    double patch_length = 0.0;              ///< m
    double peak_radial_displacement = 0.0;  ///< mm, dip depth at the patch centre
    double peak_lateral_displacement = 0.0; ///< mm, signed
    double lateral_slope = 0.0;             ///< mm lateral per mm of patch travel
    double wheel_speed = 0.0;               ///< m/s
};

/// Patch length L = v * (trailing - leading) / fs. This is the arc swept through
/// the patch, a few percent longer than the chord; calibration absorbs the bias.
double patch_length(const dsp::PatchEdges& edges, double wheel_speed, double sample_rate);

/// max(profile) - profile[patch centre], never negative. Requires `profile.patch`.
double peak_radial_displacement(const dsp::DisplacementProfile& profile);

struct LateralFeatures {
    double peak = 0.0;   ///< mm
    double slope = 0.0;  ///< dimensionless
};

/**
 * Footprint lateral deflection features.
 *
 * Deflection is referenced to the profile value at the leading edge, where a
 * tread element enters undeformed. `peak` is the signed deflection of largest
 * magnitude over the patch plus one patch-duration of release; `slope` is the
 * least-squares slope against patch travel distance over the first 30% of the
 * patch.
 */
LateralFeatures lateral_features(const dsp::DisplacementProfile& profile, const dsp::PatchEdges& edges,
                                 double wheel_speed, double sample_rate);

/// Fraction of the patch used for the initial lateral slope.
inline constexpr double kInitialSlopeFraction = 0.3;

}  // namespace tiresense::features
