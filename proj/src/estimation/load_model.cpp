#include "tiresense/estimation/load_model.hpp"

#include <cmath>
#include <set>
#include <string>

#include "tiresense/error.hpp"
#include "tiresense/estimation/least_squares.hpp"

namespace tiresense::estimation {
namespace {

constexpr double kDenominatorTolerance = 1e-9;

}  // namespace

double LoadSurfaceModel::predict(double load, double pressure) const {
    return p00 + p10 * load + p01 * pressure + p11 * load * pressure + p02 * pressure * pressure;
}

LoadSurfaceModel fit_load_surface(std::span<const LoadSurfaceSample> samples) {
    if (samples.size() < 5) throw RankDeficiencyError("load surface needs at least 5 samples");
    std::set<double> loads;
    std::set<double> pressures;
    for (const auto& s : samples) {
        loads.insert(s.load);
        pressures.insert(s.pressure);
    }
    if (loads.size() < 2 || pressures.size() < 2) {
        throw RankDeficiencyError("load surface needs at least two distinct loads and two distinct pressures");
    }

    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd x(n, 5);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        x.row(i) << 1.0, s.load, s.pressure, s.load * s.pressure, s.pressure * s.pressure;
        y[i] = s.peak_displacement;
    }
    const LinearFit fit = ordinary_least_squares(x, y);

    LoadSurfaceModel m;
    m.p00 = fit.coefficients[0];
    m.p10 = fit.coefficients[1];
    m.p01 = fit.coefficients[2];
    m.p11 = fit.coefficients[3];
    m.p02 = fit.coefficients[4];
    m.fit_residual_rms = fit.residual_rms;
    m.load_range = Interval::hull(samples, [](const auto& s) { return s.load; });
    m.pressure_range = Interval::hull(samples, [](const auto& s) { return s.pressure; });

    // The gain is affine in pressure, so checking the two ends covers the range.
    const double g_lo = m.load_gain(m.pressure_range.lo);
    const double g_hi = m.load_gain(m.pressure_range.hi);
    if (!(g_lo * g_hi > 0.0)) {
        throw ValidationError("fitted surface is not invertible in load across the pressure range");
    }
    return m;
}

Measurement load_measurement(const LoadSurfaceModel& model, double peak_displacement, double pressure) {
    if (!std::isfinite(peak_displacement) || !std::isfinite(pressure)) {
        throw ValidationError("measurement inputs must be finite");
    }
    if (!model.pressure_range.contains(pressure)) {
        throw OutOfRangeError("pressure " + std::to_string(pressure) + " psi outside calibrated range [" +
                              std::to_string(model.pressure_range.lo) + ", " +
                              std::to_string(model.pressure_range.hi) + "]");
    }
    const double den = model.load_gain(pressure);
    if (!(std::abs(den) >= kDenominatorTolerance * std::abs(model.p10))) {
        throw DenominatorError("load gain p10 + p11*pressure vanishes at " + std::to_string(pressure) + " psi");
    }
    const double num = peak_displacement - model.p00 - model.p01 * pressure - model.p02 * pressure * pressure;
    return {num / den, 1.0};
}

}  // namespace tiresense::estimation
