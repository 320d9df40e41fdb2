#include "tiresense/dsp/filters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "tiresense/error.hpp"

namespace tiresense::dsp {

double Biquad::magnitude(double f, double fs) const {
    const std::complex<double> z = std::polar(1.0, -2.0 * std::numbers::pi * f / fs);
    const std::complex<double> num = b0 + b1 * z + b2 * z * z;
    const std::complex<double> den = 1.0 + a1 * z + a2 * z * z;
    return std::abs(num / den);
}

Biquad butterworth_highpass(double cutoff, double sample_rate) {
    if (!(sample_rate > 0.0) || !(cutoff > 0.0) || !(cutoff < 0.5 * sample_rate) || !std::isfinite(cutoff)) {
        throw InvalidCutoffError("high-pass cutoff " + std::to_string(cutoff) + " Hz must lie in (0, " +
                                 std::to_string(0.5 * sample_rate) + ") Hz");
    }
    const double k = std::tan(std::numbers::pi * cutoff / sample_rate);
    const double k2 = k * k;
    const double norm = 1.0 / (1.0 + std::numbers::sqrt2 * k + k2);
    Biquad f;
    f.b0 = norm;
    f.b1 = -2.0 * norm;
    f.b2 = norm;
    f.a1 = 2.0 * (k2 - 1.0) * norm;
    f.a2 = (1.0 - std::numbers::sqrt2 * k + k2) * norm;
    return f;
}

std::vector<double> filter_from_rest(const Biquad& f, std::span<const double> x) {
    std::vector<double> y(x.size());
    double z1 = 0.0;
    double z2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double out = f.b0 * x[i] + z1;
        z1 = f.b1 * x[i] - f.a1 * out + z2;
        z2 = f.b2 * x[i] - f.a2 * out;
        y[i] = out;
    }
    return y;
}

std::vector<double> highpass(std::span<const double> signal, double sample_rate, double cutoff) {
    const Biquad f = butterworth_highpass(cutoff, sample_rate);
    if (signal.empty()) return {};

    const double mean = std::accumulate(signal.begin(), signal.end(), 0.0) / static_cast<double>(signal.size());
    std::vector<double> centered(signal.size());
    std::transform(signal.begin(), signal.end(), centered.begin(), [mean](double v) { return v - mean; });

    std::vector<double> forward = filter_from_rest(f, centered);
    std::reverse(forward.begin(), forward.end());
    std::vector<double> out = filter_from_rest(f, forward);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<double> moving_average(std::span<const double> x, std::size_t width) {
    const std::size_t n = x.size();
    std::vector<double> out(n);
    if (n == 0) return out;
    width = std::max<std::size_t>(1, width);
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i];
    const std::size_t before = (width - 1) / 2;
    const std::size_t after = width - 1 - before;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= before ? i - before : 0;
        const std::size_t hi = std::min(n, i + after + 1);
        out[i] = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
    }
    return out;
}

}  // namespace tiresense::dsp
