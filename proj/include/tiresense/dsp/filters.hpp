#pragma once

#include <span>
#include <vector>

namespace tiresense::dsp {

/// Direct-form II transposed biquad coefficients, a0 normalised to 1.
struct Biquad {
    double b0 = 1.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;

    /// |H(e^{jw})| at frequency `f` for sample rate `fs`.
    double magnitude(double f, double fs) const;
};

/// Second-order Butterworth high-pass via the bilinear transform with pre-warping.
/// Throws InvalidCutoffError unless 0 < cutoff < sample_rate / 2.
Biquad butterworth_highpass(double cutoff, double sample_rate);

/// Causal filtering starting from zero state.
std::vector<double> filter_from_rest(const Biquad& f, std::span<const double> x);

/**
 * Zero-phase second-order high-pass.
 *
 * The record mean is removed, then the Butterworth section runs forward and
 * backward from rest. Net response is |H|^2 with zero phase, DC is rejected
 * exactly, and the operator is linear in the input.
 */
std::vector<double> highpass(std::span<const double> signal, double sample_rate, double cutoff);

/// Centred moving average; the window shrinks at the record ends.
std::vector<double> moving_average(std::span<const double> x, std::size_t width);

}  // namespace tiresense::dsp
