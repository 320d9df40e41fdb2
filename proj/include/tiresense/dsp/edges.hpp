#pragma once

#include <span>

#include "tiresense/dsp/profile.hpp"

namespace tiresense::dsp {

/// Leading edge = tangential maximum, trailing edge = tangential minimum.
///
/// Extrema are found on a moving average of width turn_length/100 and then
/// snapped to the raw extremum inside that window. Throws EdgeOrderError
/// unless 0 < trailing - leading < turn_length / 2.
PatchEdges detect_patch_edges(std::span<const double> tangential);

}  // namespace tiresense::dsp
