#include "tiresense/features/footprint.hpp"

#include <algorithm>
#include <cmath>

#include "tiresense/error.hpp"
#include "tiresense/units.hpp"

namespace tiresense::features {

double patch_length(const dsp::PatchEdges& edges, double wheel_speed, double sample_rate) {
    return wheel_speed * static_cast<double>(edges.duration_samples()) / sample_rate;
}

double peak_radial_displacement(const dsp::DisplacementProfile& profile) {
    if (!profile.patch) throw ValidationError("radial profile has no patch window");
    const auto& s = profile.samples_mm;
    const std::size_t center = profile.patch->center();
    if (center >= s.size()) throw ValidationError("patch centre lies outside the profile");
    const double top = *std::max_element(s.begin(), s.end());
    return std::max(0.0, top - s[center]);
}

LateralFeatures lateral_features(const dsp::DisplacementProfile& profile, const dsp::PatchEdges& edges,
                                 double wheel_speed, double sample_rate) {
    const auto& s = profile.samples_mm;
    if (edges.trailing >= s.size() || edges.trailing <= edges.leading) {
        throw ValidationError("patch window does not fit the lateral profile");
    }
    const std::size_t duration = edges.duration_samples();
    const double entry = s[edges.leading];

    LateralFeatures out;
    const std::size_t last = std::min(s.size() - 1, edges.trailing + duration);
    for (std::size_t i = edges.leading; i <= last; ++i) {
        const double d = s[i] - entry;
        if (std::abs(d) > std::abs(out.peak)) out.peak = d;
    }

    const auto m = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::lround(kInitialSlopeFraction * static_cast<double>(duration))));
    const double mm_per_sample = units::m_to_mm(wheel_speed / sample_rate);
    double su = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        su += static_cast<double>(k) * mm_per_sample;
        sy += s[edges.leading + k];
    }
    const double mu = su / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double suu = 0.0;
    double suy = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double u = static_cast<double>(k) * mm_per_sample - mu;
        suu += u * u;
        suy += u * (s[edges.leading + k] - my);
    }
    out.slope = suu > 0.0 ? suy / suu : 0.0;
    return out;
}

}  // namespace tiresense::features
