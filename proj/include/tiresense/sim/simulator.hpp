#pragma once

#include "tiresense/sim/tire_scenario.hpp"

namespace tiresense::sim {

/// Flat-spot geometry of a loaded tire.
struct TireGeometry {
    double effective_radius = 0.0;    ///< m
    double deflection = 0.0;          ///< m
    double contact_half_angle = 0.0;  ///< rad

    double deflection_mm() const;
    double patch_chord() const;  ///< m, straight contact length
    double patch_arc() const;    ///< m, arc length swept through the patch
};

/// Chord/arc geometry of a circle of radius `effective_radius` flattened by `deflection` (both m).
/// Zero deflection is the no-contact limit. Throws GeometryError when deflection >= radius.
TireGeometry flat_spot_geometry(double effective_radius, double deflection);

/// Effective radius after wear, vertical deflection from k(P) = c0 + c1 P, and the
/// contact half angle. Validates the scenario first.
TireGeometry derive_geometry(const TireScenario& scenario);

/// Seconds per revolution at the scenario speed.
double wheel_period(const TireScenario& scenario);

struct Simulation {
    AccelTrace trace;
    GroundTruth truth;
};

/**
 * Synthesise `n_turns` revolutions of inner-liner acceleration.
 *
 * Each revolution starts with the sensor at the top of the wheel, so patch
 * centres fall at (k + 1/2) periods. The liner point follows the wheel circle
 * outside the contact window and a straight chord inside it; the lateral
 * coordinate follows an adhesion-only brush profile. Acceleration is the second
 * central difference of that trajectory, projected onto the rotating sensor
 * axes, plus Gaussian noise and a constant bias per axis.
 *
 * Throws GeometryError / ResolutionError / ValidationError on invalid input.
 */
Simulation simulate(const TireScenario& scenario, const SensorSpec& sensor, int n_turns);

}  // namespace tiresense::sim
