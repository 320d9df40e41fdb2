#pragma once

#include <array>
#include <string>
#include <vector>

#include "tiresense/estimation/interval.hpp"
#include "tiresense/sim/tire_scenario.hpp"

namespace tiresense::estimation {

enum class Factor { load, pressure, tread };
enum class SweepFeature { patch_length, peak_radial_displacement };

inline constexpr std::array<Factor, 3> kFactors{Factor::load, Factor::pressure, Factor::tread};
inline constexpr std::array<SweepFeature, 2> kSweepFeatures{SweepFeature::patch_length,
                                                            SweepFeature::peak_radial_displacement};

std::string to_string(Factor f);
std::string to_string(SweepFeature f);

struct SweepConfig {
    Interval load{800.0, 1500.0};   ///< lbf
    Interval pressure{29.0, 35.0};  ///< psi
    Interval tread{2.0, 8.0};       ///< mm
    int points = 5;                 ///< per factor, >= 2 unless the range is a point
    int turns = 6;                  ///< simulated turns per grid point
    sim::TireScenario base;         ///< non-swept fields; swept ones are overwritten
    sim::SensorSpec sensor{10000.0, 0.0, {5.0, 5.0, 5.0}, 1};

    void validate() const;
};

struct FeatureSensitivity {
    SweepFeature feature = SweepFeature::patch_length;
    std::array<double, 3> span{};   ///< max - min of the feature along each factor sweep
    std::array<double, 3> share{};  ///< percent of the summed spans

    double share_of(Factor f) const { return share[static_cast<std::size_t>(f)]; }
};

struct SweepPoint {
    Factor factor = Factor::load;
    double value = 0.0;
    double patch_length = 0.0;       ///< m
    double peak_radial = 0.0;        ///< mm
};

struct SensitivityReport {
    SweepConfig config;
    std::vector<FeatureSensitivity> features;
    std::vector<SweepPoint> points;

    const FeatureSensitivity& of(SweepFeature f) const;
};

/// Values visited along one factor: `points` evenly spaced samples of the range.
std::vector<double> sweep_values(const Interval& range, int points);

/// Span shares in percent; all zero when every span is zero.
std::array<double, 3> span_shares(const std::array<double, 3>& spans);

/// One-at-a-time sweeps about the centre of each range. Each grid point is
/// simulated and reduced to mean per-turn features.
SensitivityReport sensitivity_sweep(const SweepConfig& config);

}  // namespace tiresense::estimation
