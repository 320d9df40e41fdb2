#include "tiresense/dsp/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "tiresense/dsp/filters.hpp"
#include "tiresense/error.hpp"

namespace tiresense::dsp {
namespace {

constexpr double kPeriodSearchSpan = 0.2;
constexpr double kCenterSmoothingFraction = 1.0 / 50.0;
// A turn whose boundary falls this many samples outside the record still counts as complete.
constexpr double kBoundarySlackSamples = 1.0;

double median_of(std::span<const double> x) {
    std::vector<double> tmp(x.begin(), x.end());
    auto mid = tmp.begin() + static_cast<std::ptrdiff_t>(tmp.size() / 2);
    std::nth_element(tmp.begin(), mid, tmp.end());
    return *mid;
}

// Fractional position where the line between samples i and i+1 crosses `level`.
double crossing(std::span<const double> s, std::size_t i, double level) {
    const double d = s[i + 1] - s[i];
    if (d == 0.0) return static_cast<double>(i);
    return static_cast<double>(i) + (level - s[i]) / d;
}

// Centre of the dip containing the minimum of s[lo, hi). Empty when the window
// holds no dip reaching halfway from `baseline` to `deepest`, or when the dip
// is cut by the record ends (incomplete patch).
std::optional<double> dip_center(std::span<const double> s, std::size_t lo, std::size_t hi, double baseline,
                                 double deepest) {
    if (hi <= lo + 2) return std::nullopt;
    const auto window = s.subspan(lo, hi - lo);
    const std::size_t idx = lo + static_cast<std::size_t>(std::min_element(window.begin(), window.end()) - window.begin());
    const double floor = s[idx];
    if (!(floor < baseline - 0.5 * (baseline - deepest))) return std::nullopt;
    const double level = floor + 0.5 * (baseline - floor);

    std::size_t left = idx;
    while (left > 0 && s[left - 1] <= level) --left;
    if (left == 0) return std::nullopt;
    std::size_t right = idx;
    while (right + 1 < s.size() && s[right + 1] <= level) ++right;
    if (right + 1 >= s.size()) return std::nullopt;

    const double x_left = crossing(s, left - 1, level);
    const double x_right = crossing(s, right, level);
    return 0.5 * (x_left + x_right);
}

}  // namespace

double estimate_period(const sim::AccelTrace& trace, double speed_hint, double radius_hint) {
    if (!(speed_hint > 0.0) || !(radius_hint > 0.0)) throw ValidationError("period hints must be > 0");
    const double fs = trace.sample_rate;
    const double expected = 2.0 * std::numbers::pi * radius_hint / speed_hint;
    const std::size_t n = trace.size();
    if (static_cast<double>(n) < 3.0 * expected * fs) {
        throw TooShortError("trace holds fewer than three expected wheel periods");
    }

    const std::span<const double> r = trace.radial;
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(n);
    std::vector<double> x(n);
    std::transform(r.begin(), r.end(), x.begin(), [mean](double v) { return v - mean; });

    const auto lag_lo = static_cast<std::size_t>(std::floor((1.0 - kPeriodSearchSpan) * expected * fs));
    const auto lag_hi = static_cast<std::size_t>(std::ceil((1.0 + kPeriodSearchSpan) * expected * fs));
    if (lag_lo < 2) throw NoPeakError("period search window collapses below two samples");

    // ac[k] holds the autocorrelation at lag (lag_lo - 1 + k).
    std::vector<double> ac(lag_hi - lag_lo + 3);
    for (std::size_t k = 0; k < ac.size(); ++k) {
        const std::size_t lag = lag_lo - 1 + k;
        double acc = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i) acc += x[i] * x[i + lag];
        ac[k] = acc / static_cast<double>(n - lag);
    }

    std::optional<std::size_t> best;
    for (std::size_t k = 1; k + 1 < ac.size(); ++k) {
        const bool local_max = ac[k] > ac[k - 1] && ac[k] >= ac[k + 1];
        if (local_max && ac[k] > 0.0 && (!best || ac[k] > ac[*best])) best = k;
    }
    if (!best) throw NoPeakError("radial autocorrelation has no peak within +-20% of the expected period");

    const std::size_t k = *best;
    const double denom = ac[k - 1] - 2.0 * ac[k] + ac[k + 1];
    const double offset = denom != 0.0 ? 0.5 * (ac[k - 1] - ac[k + 1]) / denom : 0.0;
    const double lag = static_cast<double>(lag_lo - 1 + k) + offset;
    return lag / fs;
}

std::vector<double> find_patch_centers(const sim::AccelTrace& trace, double period) {
    if (!(period > 0.0)) throw ValidationError("period must be > 0");
    const double samples_per_turn = period * trace.sample_rate;
    const std::size_t n = trace.size();
    if (static_cast<double>(n) < samples_per_turn) throw TooShortError("trace is shorter than one wheel period");

    const auto width = static_cast<std::size_t>(std::max(1.0, std::round(samples_per_turn * kCenterSmoothingFraction)));
    const std::vector<double> smooth = moving_average(trace.radial, width);

    const double baseline = median_of(smooth);
    const double deepest = *std::min_element(smooth.begin(), smooth.end());
    if (!(baseline > deepest)) return {};

    std::vector<double> centers;
    double search_from = 0.0;
    while (search_from < static_cast<double>(n)) {
        const auto lo = static_cast<std::size_t>(std::max(0.0, std::floor(search_from)));
        const auto hi = static_cast<std::size_t>(std::min(static_cast<double>(n), std::ceil(search_from + samples_per_turn)));
        if (hi <= lo) break;
        const std::optional<double> c = dip_center(smooth, lo, hi, baseline, deepest);
        if (c) {
            centers.push_back(*c);
            search_from = *c + 0.5 * samples_per_turn;
        } else {
            search_from += samples_per_turn;
        }
    }
    return centers;
}

std::vector<WheelTurnSegment> segment_turns(const sim::AccelTrace& trace, double period) {
    const std::vector<double> centers = find_patch_centers(trace, period);
    const double samples_per_turn = period * trace.sample_rate;
    const auto n = static_cast<double>(trace.size());

    std::vector<WheelTurnSegment> segments;
    for (std::size_t j = 0; j < centers.size(); ++j) {
        const double begin = j == 0 ? centers[j] - 0.5 * samples_per_turn : 0.5 * (centers[j - 1] + centers[j]);
        const double end =
            j + 1 == centers.size() ? centers[j] + 0.5 * samples_per_turn : 0.5 * (centers[j] + centers[j + 1]);
        if (begin < -kBoundarySlackSamples || end > n + kBoundarySlackSamples) continue;

        WheelTurnSegment seg;
        seg.start_index = static_cast<std::size_t>(std::clamp(std::round(begin), 0.0, n));
        seg.end_index = static_cast<std::size_t>(std::clamp(std::round(end), 0.0, n));
        if (seg.end_index <= seg.start_index) continue;
        seg.period = period;
        seg.wheel_speed_estimate = 2.0 * std::numbers::pi / period;
        const std::size_t len = seg.size();
        seg.tangential = std::span<const double>(trace.tangential).subspan(seg.start_index, len);
        seg.lateral = std::span<const double>(trace.lateral).subspan(seg.start_index, len);
        seg.radial = std::span<const double>(trace.radial).subspan(seg.start_index, len);
        segments.push_back(seg);
    }
    if (segments.empty()) throw TooShortError("trace contains no complete wheel turn");
    return segments;
}

}  // namespace tiresense::dsp
