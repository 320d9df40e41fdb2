#include "tiresense/dsp/integration.hpp"

#include <algorithm>
#include <numeric>

#include "tiresense/dsp/filters.hpp"
#include "tiresense/error.hpp"
#include "tiresense/units.hpp"

namespace tiresense::dsp {

std::vector<double> cumulative_trapezoid(std::span<const double> x, double sample_rate) {
    std::vector<double> out(x.size(), 0.0);
    const double half_dt = 0.5 / sample_rate;
    for (std::size_t i = 1; i < x.size(); ++i) out[i] = out[i - 1] + half_dt * (x[i] + x[i - 1]);
    return out;
}

std::vector<double> remove_linear_trend(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<double> out(x.begin(), x.end());
    if (n == 0) return out;
    if (n == 1) {
        out[0] = 0.0;
        return out;
    }
    // Centred abscissa keeps the slope and intercept decoupled.
    const double mid = 0.5 * static_cast<double>(n - 1);
    double sxx = 0.0;
    double sxy = 0.0;
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) - mid;
        sxx += u * u;
        sxy += u * (x[i] - mean);
    }
    const double slope = sxy / sxx;
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - mean - slope * (static_cast<double>(i) - mid);
    return out;
}

DisplacementProfile accel_to_displacement(std::span<const double> accel, double sample_rate,
                                          double rotation_frequency, Axis axis) {
    const double cutoff = kCutoffPerRotation * rotation_frequency;
    // highpass() strips the mean before filtering, which covers the first pipeline step.
    const std::vector<double> a = highpass(accel, sample_rate, cutoff);
    const std::vector<double> v = highpass(cumulative_trapezoid(a, sample_rate), sample_rate, cutoff);
    std::vector<double> x = remove_linear_trend(cumulative_trapezoid(v, sample_rate));
    for (double& s : x) s = units::m_to_mm(s);
    return DisplacementProfile{axis, std::move(x), std::nullopt};
}

std::vector<double> integrate_unfiltered(std::span<const double> accel, double sample_rate) {
    const std::vector<double> v = cumulative_trapezoid(accel, sample_rate);
    return cumulative_trapezoid(v, sample_rate);
}

}  // namespace tiresense::dsp
