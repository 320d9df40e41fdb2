#pragma once

#include <span>

#include "tiresense/estimation/interval.hpp"

namespace tiresense::estimation {

/// Baseline load model: load ~= q0 + q1 * patch_length, fitted at one
/// reference pressure and tread depth.
struct PatchLoadModel {
    double q0 = 0.0;  ///< lbf
    double q1 = 0.0;  ///< lbf/m
    double reference_pressure = 0.0;  ///< psi
    double reference_tread = 0.0;     ///< mm
    double fit_residual_rms = 0.0;    ///< lbf
    Interval patch_range;  ///< m
    Interval load_range;   ///< lbf
};

struct PatchLoadSample {
    double load = 0.0;          ///< lbf
    double patch_length = 0.0;  ///< m
};

PatchLoadModel fit_patch_load_model(std::span<const PatchLoadSample> samples, double reference_pressure,
                                    double reference_tread);

struct PatchLoadEstimate {
    double load = 0.0;
    bool in_range = false;  ///< patch length inside the trained range
};

/// Affine inversion; extrapolates outside the trained range and flags it.
PatchLoadEstimate estimate_load_patch(const PatchLoadModel& model, double patch_length);

}  // namespace tiresense::estimation
