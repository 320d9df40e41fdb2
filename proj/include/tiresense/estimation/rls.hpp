#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tiresense/estimation/load_model.hpp"

namespace tiresense::estimation {

/// Scalar recursive least-squares state (theta = tire load, lbf).
struct RlsState {
    double theta = 0.0;
    double covariance = 1e6;
    double forgetting_factor = 0.98;
};

inline constexpr double kDefaultForgettingFactor = 0.98;
inline constexpr double kDefaultInitialCovariance = 1e6;

/// One exponentially weighted RLS step. Throws ValidationError for a state with
/// non-positive covariance or a forgetting factor outside (0, 1].
RlsState rls_update(const RlsState& state, double y, double regressor);

/// First 1-based turn number after which every estimate stays within
/// `tolerance` (relative) of the final estimate. Empty with no estimates.
std::optional<std::size_t> convergence_turn(std::span<const std::optional<double>> estimates,
                                            double tolerance = 0.01);

struct LoadStreamResult {
    /// Running estimate after each turn; empty before the first valid turn.
    std::vector<std::optional<double>> estimates;
    std::vector<bool> valid;  ///< whether the turn updated the estimator
    std::optional<std::size_t> convergence_turn;
    std::size_t skipped = 0;
    std::optional<double> final_estimate;
};

/// Per-turn load_measurement + rls_update. Turns with no feature are skipped
/// and counted; measurement errors propagate.
LoadStreamResult estimate_load_stream(const LoadSurfaceModel& model,
                                      std::span<const std::optional<double>> peak_displacements,
                                      std::span<const double> pressures,
                                      double forgetting_factor = kDefaultForgettingFactor,
                                      double initial_covariance = kDefaultInitialCovariance);

/// RLS (phi = 1) over a stream of direct load measurements; empty entries skipped.
LoadStreamResult smooth_load_stream(std::span<const std::optional<double>> loads,
                                    double forgetting_factor = kDefaultForgettingFactor,
                                    double initial_covariance = kDefaultInitialCovariance);

}  // namespace tiresense::estimation
