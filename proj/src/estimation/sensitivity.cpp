#include "tiresense/estimation/sensitivity.hpp"

#include <algorithm>
#include <cmath>

#include "tiresense/error.hpp"
#include "tiresense/features/pipeline.hpp"
#include "tiresense/sim/simulator.hpp"

namespace tiresense::estimation {

std::string to_string(Factor f) {
    switch (f) {
        case Factor::load: return "load";
        case Factor::pressure: return "pressure";
        case Factor::tread: return "tread";
    }
    return "unknown";
}

std::string to_string(SweepFeature f) {
    switch (f) {
        case SweepFeature::patch_length: return "patch_length";
        case SweepFeature::peak_radial_displacement: return "peak_radial_displacement";
    }
    return "unknown";
}

void SweepConfig::validate() const {
    for (const Interval* r : {&load, &pressure, &tread}) {
        if (!std::isfinite(r->lo) || !std::isfinite(r->hi) || r->lo > r->hi) {
            throw ValidationError("sweep range must satisfy lo <= hi");
        }
    }
    if (points < 1) throw ValidationError("sweep needs at least one point per factor");
    if (turns < 3) throw ValidationError("sweep needs at least three turns per point");
    sensor.validate();
}

const FeatureSensitivity& SensitivityReport::of(SweepFeature f) const {
    const auto it = std::find_if(features.begin(), features.end(), [f](const auto& s) { return s.feature == f; });
    if (it == features.end()) throw ValidationError("feature missing from sensitivity report");
    return *it;
}

std::vector<double> sweep_values(const Interval& range, int points) {
    if (points < 1) throw ValidationError("sweep needs at least one point");
    if (points == 1 || range.span() == 0.0) return {0.5 * (range.lo + range.hi)};
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = range.lo + range.span() * i / (points - 1);
    return v;
}

std::array<double, 3> span_shares(const std::array<double, 3>& spans) {
    double total = 0.0;
    for (double s : spans) total += s;
    std::array<double, 3> out{};
    if (!(total > 0.0)) return out;
    for (std::size_t i = 0; i < spans.size(); ++i) out[i] = 100.0 * spans[i] / total;
    return out;
}

SensitivityReport sensitivity_sweep(const SweepConfig& config) {
    config.validate();
    sim::TireScenario centre = config.base;
    centre.vertical_load = 0.5 * (config.load.lo + config.load.hi);
    centre.inflation_pressure = 0.5 * (config.pressure.lo + config.pressure.hi);
    centre.tread_depth = 0.5 * (config.tread.lo + config.tread.hi);

    SensitivityReport report;
    report.config = config;
    std::array<std::array<double, 3>, 2> spans{};

    for (Factor factor : kFactors) {
        const Interval& range = factor == Factor::load       ? config.load
                                : factor == Factor::pressure ? config.pressure
                                                             : config.tread;
        double pl_min = 0.0, pl_max = 0.0, pr_min = 0.0, pr_max = 0.0;
        bool first = true;
        for (double value : sweep_values(range, config.points)) {
            sim::TireScenario s = centre;
            (factor == Factor::load ? s.vertical_load
             : factor == Factor::pressure ? s.inflation_pressure
                                          : s.tread_depth) = value;
            const sim::Simulation run = sim::simulate(s, config.sensor, config.turns);
            const features::TraceAnalysis analysis =
                features::analyze_trace(run.trace, {s.vehicle_speed, s.unloaded_radius});
            const auto mean = analysis.mean_features();
            if (!mean) throw ValidationError("sweep point produced no valid turn");

            report.points.push_back({factor, value, mean->patch_length, mean->peak_radial_displacement});
            pl_min = first ? mean->patch_length : std::min(pl_min, mean->patch_length);
            pl_max = first ? mean->patch_length : std::max(pl_max, mean->patch_length);
            pr_min = first ? mean->peak_radial_displacement : std::min(pr_min, mean->peak_radial_displacement);
            pr_max = first ? mean->peak_radial_displacement : std::max(pr_max, mean->peak_radial_displacement);
            first = false;
        }
        const auto idx = static_cast<std::size_t>(factor);
        spans[0][idx] = pl_max - pl_min;
        spans[1][idx] = pr_max - pr_min;
    }

    for (std::size_t f = 0; f < kSweepFeatures.size(); ++f) {
        FeatureSensitivity fs;
        fs.feature = kSweepFeatures[f];
        fs.span = spans[f];
        fs.share = span_shares(spans[f]);
        report.features.push_back(fs);
    }
    return report;
}

}  // namespace tiresense::estimation
