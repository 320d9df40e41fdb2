#pragma once

#include <span>

#include "tiresense/estimation/interval.hpp"

namespace tiresense::estimation {

/// alpha = beta0 + beta1 * peak_lateral + beta2 * lateral_slope  (deg)
struct SlipModel {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double fit_residual_rms = 0.0;  ///< deg
    Interval slip_range;            ///< deg, trained targets
};

struct SlipSample {
    double peak_lateral = 0.0;   ///< mm
    double lateral_slope = 0.0;
    double slip = 0.0;           ///< deg
};

/// Needs >= 3 non-collinear samples, else RankDeficiencyError.
SlipModel fit_slip_model(std::span<const SlipSample> samples);

/// Prediction clamped to the trained slip range widened by 20% of its span on each side.
double predict_slip(const SlipModel& model, double peak_lateral, double lateral_slope);

}  // namespace tiresense::estimation
