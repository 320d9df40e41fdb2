#pragma once

#include <span>

#include "tiresense/estimation/interval.hpp"

namespace tiresense::estimation {

/// Peak radial displacement (mm) as a surface in load (lbf) and pressure (psi):
///   d = p00 + p10 L + p01 P + p11 L P + p02 P^2
struct LoadSurfaceModel {
    double p00 = 0.0;
    double p10 = 0.0;
    double p01 = 0.0;
    double p11 = 0.0;
    double p02 = 0.0;
    double fit_residual_rms = 0.0;  ///< mm
    Interval load_range;
    Interval pressure_range;

    double predict(double load, double pressure) const;
    /// d(displacement)/d(load) at `pressure`; the denominator of the inversion.
    double load_gain(double pressure) const { return p10 + p11 * pressure; }
};

struct LoadSurfaceSample {
    double load = 0.0;               ///< lbf
    double pressure = 0.0;           ///< psi
    double peak_displacement = 0.0;  ///< mm
};

/// OLS on {1, L, P, L P, P^2}. Needs >= 5 samples spanning >= 2 loads and >= 2
/// pressures, otherwise RankDeficiencyError. Throws ValidationError when the
/// fitted surface is not invertible in load across the fitted pressure range.
LoadSurfaceModel fit_load_surface(std::span<const LoadSurfaceSample> samples);

/// Scalar regression pair y = phi * theta.
struct Measurement {
    double y = 0.0;
    double regressor = 1.0;
};

/// Rearranges the surface so that y is the load implied by `peak_displacement`
/// at `pressure` (phi = 1). Throws OutOfRangeError for a pressure outside the
/// fitted range and DenominatorError when |p10 + p11 P| < 1e-9 |p10|.
Measurement load_measurement(const LoadSurfaceModel& model, double peak_displacement, double pressure);

}  // namespace tiresense::estimation
