#include "tiresense/dsp/edges.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tiresense/dsp/filters.hpp"
#include "tiresense/error.hpp"

namespace tiresense::dsp {
namespace {

template <typename Better>
std::size_t snap_to_raw(std::span<const double> raw, std::size_t approx, std::size_t radius, Better better) {
    const std::size_t lo = approx > radius ? approx - radius : 0;
    const std::size_t hi = std::min(raw.size(), approx + radius + 1);
    std::size_t best = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        if (better(raw[i], raw[best])) best = i;
    }
    return best;
}

}  // namespace

PatchEdges detect_patch_edges(std::span<const double> tangential) {
    const std::size_t n = tangential.size();
    if (n < 4) throw EdgeOrderError("turn too short for patch edge detection");
    const auto width = static_cast<std::size_t>(std::max(1.0, std::round(static_cast<double>(n) / 100.0)));
    const std::vector<double> smooth = moving_average(tangential, width);

    const auto max_it = std::max_element(smooth.begin(), smooth.end());
    const auto min_it = std::min_element(smooth.begin(), smooth.end());
    const auto coarse_lead = static_cast<std::size_t>(max_it - smooth.begin());
    const auto coarse_trail = static_cast<std::size_t>(min_it - smooth.begin());

    PatchEdges edges;
    edges.leading = snap_to_raw(tangential, coarse_lead, width, std::greater<>{});
    edges.trailing = snap_to_raw(tangential, coarse_trail, width, std::less<>{});

    if (edges.trailing <= edges.leading || 2 * (edges.trailing - edges.leading) >= n) {
        throw EdgeOrderError("tangential extrema at " + std::to_string(edges.leading) + " / " +
                             std::to_string(edges.trailing) + " do not bracket a contact patch in a " +
                             std::to_string(n) + "-sample turn");
    }
    return edges;
}

}  // namespace tiresense::dsp
