#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tiresense::sim {

/**
 * Physical operating point of the instrumented tire.
 *
 * Load, pressure and tread use the units of the test protocol (lbf, psi, mm);
 * everything else is SI. Defaults describe a passenger tire at the centre of
 * the 800-1500 lbf x 29-35 psi x 2-8 mm test grid.
 */
struct TireScenario {
    double unloaded_radius = 0.3;      ///< m, at full 8 mm tread
    double tread_depth = 8.0;          ///< mm
    double vertical_load = 1150.0;     ///< lbf
    double inflation_pressure = 32.0;  ///< psi
    double slip_angle = 0.0;           ///< deg, |slip| <= 10
    double vehicle_speed = 20.0;       ///< m/s
    double stiffness_c0 = 104.0;       ///< N/mm
    double stiffness_c1 = 3.0;         ///< N/(mm psi)
    double wear_radius_gain = 6.5;     ///< mm of radius lost per mm of tread lost
    /// rad; lateral deflection relaxes to zero over this angle after patch exit.
    /// Unset means "same as the contact half angle".
    std::optional<double> release_angle;

    /// Throws ValidationError when a field is out of its physical domain.
    void validate() const;
};

struct SensorSpec {
    double sample_rate = 10000.0;                ///< Hz
    double noise_std = 25.0;                     ///< m/s^2, per axis
    std::array<double, 3> dc_bias{5.0, 5.0, 5.0};  ///< m/s^2 (tangential, lateral, radial)
    std::uint64_t seed = 1;

    void validate() const;
};

/// Uniformly sampled tri-axial acceleration in sensor axes (m/s^2).
///
/// Radial points toward the wheel centre, tangential along the direction of
/// travel at the contact patch, lateral along the spin axis.
struct AccelTrace {
    double sample_rate = 0.0;
    std::vector<double> tangential;
    std::vector<double> lateral;
    std::vector<double> radial;

    std::size_t size() const { return radial.size(); }
    double duration() const { return static_cast<double>(size()) / sample_rate; }
    double time_at(std::size_t i) const { return static_cast<double>(i) / sample_rate; }

    /// Checks equal channel lengths, positive rate and finite samples.
    void validate() const;
};

/// Exact per-revolution state used by the simulator.
struct TurnTruth {
    double deflection_mm = 0.0;
    double patch_chord = 0.0;         ///< m
    double patch_arc = 0.0;           ///< m
    double contact_half_angle = 0.0;  ///< rad
    double peak_lateral_mm = 0.0;
    double lateral_slope = 0.0;       ///< tan(slip angle)
    double turn_start_time = 0.0;     ///< s
    double wheel_period = 0.0;        ///< s
    double patch_entry_time = 0.0;    ///< s
    double patch_exit_time = 0.0;     ///< s

    double patch_center_time() const { return 0.5 * (patch_entry_time + patch_exit_time); }
};

struct GroundTruth {
    double effective_radius = 0.0;  ///< m
    std::vector<TurnTruth> turns;
};

}  // namespace tiresense::sim
