#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tiresense::dsp {

enum class Axis { radial, lateral };

/// Leading / trailing patch edge, as sample indices relative to the turn start.
struct PatchEdges {
    std::size_t leading = 0;
    std::size_t trailing = 0;

    std::size_t duration_samples() const { return trailing - leading; }
    std::size_t center() const { return (leading + trailing) / 2; }
};

/// Per-turn displacement recovered by filtered double integration.
struct DisplacementProfile {
    Axis axis = Axis::radial;
    std::vector<double> samples_mm;
    std::optional<PatchEdges> patch;
};

}  // namespace tiresense::dsp
