#pragma once

#include <span>
#include <vector>

#include "tiresense/dsp/profile.hpp"

namespace tiresense::dsp {

/// High-pass corner used by the drift-free integrator, as a fraction of the wheel rotation frequency.
inline constexpr double kCutoffPerRotation = 0.3;

/// Running trapezoidal integral, first output sample 0.
std::vector<double> cumulative_trapezoid(std::span<const double> x, double sample_rate);

/// Subtracts the least-squares line (output has zero mean and zero linear trend).
std::vector<double> remove_linear_trend(std::span<const double> x);

/**
 * Drift-free displacement (mm) from one turn of acceleration (m/s^2).
 *
 * mean removal -> highpass -> integrate -> highpass -> integrate -> linear detrend,
 * with the high-pass corner at 0.3 x `rotation_frequency`. A constant bias
 * on the input cannot reach the output. The record ends carry filter
 * transients, so amplitude fidelity holds away from them.
 */
DisplacementProfile accel_to_displacement(std::span<const double> accel, double sample_rate,
                                          double rotation_frequency, Axis axis = Axis::radial);

/// Plain double trapezoidal integration (m), no filtering. Used to show drift.
std::vector<double> integrate_unfiltered(std::span<const double> accel, double sample_rate);

}  // namespace tiresense::dsp
