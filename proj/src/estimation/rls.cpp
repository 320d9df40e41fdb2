#include "tiresense/estimation/rls.hpp"

#include <cmath>

#include "tiresense/error.hpp"

namespace tiresense::estimation {

RlsState rls_update(const RlsState& state, double y, double regressor) {
    const double lambda = state.forgetting_factor;
    if (!(lambda > 0.0 && lambda <= 1.0)) throw ValidationError("forgetting factor must lie in (0, 1]");
    if (!(state.covariance > 0.0) || !std::isfinite(state.covariance)) {
        throw ValidationError("RLS covariance must be finite and > 0");
    }
    if (!std::isfinite(state.theta) || !std::isfinite(y) || !std::isfinite(regressor)) {
        throw ValidationError("RLS inputs must be finite");
    }
    const double p = state.covariance;
    const double gain = p * regressor / (lambda + regressor * p * regressor);
    RlsState next = state;
    next.theta = state.theta + gain * (y - regressor * state.theta);
    // P - K phi P = P lambda / (lambda + phi^2 P), written to stay positive.
    next.covariance = p / (lambda + regressor * p * regressor);
    return next;
}

std::optional<std::size_t> convergence_turn(std::span<const std::optional<double>> estimates, double tolerance) {
    std::optional<double> final_value;
    for (auto it = estimates.rbegin(); it != estimates.rend(); ++it) {
        if (*it) {
            final_value = *it;
            break;
        }
    }
    if (!final_value) return std::nullopt;

    std::size_t first_ok = estimates.size();
    for (std::size_t i = estimates.size(); i-- > 0;) {
        const auto& e = estimates[i];
        const bool ok = e && (*final_value == 0.0 ? *e == 0.0 : std::abs(*e / *final_value - 1.0) < tolerance);
        if (!ok) break;
        first_ok = i;
    }
    return first_ok + 1;
}

namespace {

LoadStreamResult run_stream(std::size_t n, double forgetting_factor, double initial_covariance, auto&& measure) {
    LoadStreamResult out;
    out.estimates.reserve(n);
    out.valid.reserve(n);
    RlsState state{0.0, initial_covariance, forgetting_factor};
    bool started = false;
    for (std::size_t i = 0; i < n; ++i) {
        const std::optional<Measurement> m = measure(i);
        if (m) {
            state = rls_update(state, m->y, m->regressor);
            started = true;
        } else {
            ++out.skipped;
        }
        out.valid.push_back(m.has_value());
        out.estimates.push_back(started ? std::optional<double>(state.theta) : std::nullopt);
    }
    if (started) out.final_estimate = state.theta;
    out.convergence_turn = convergence_turn(out.estimates);
    return out;
}

}  // namespace

LoadStreamResult estimate_load_stream(const LoadSurfaceModel& model,
                                      std::span<const std::optional<double>> peak_displacements,
                                      std::span<const double> pressures, double forgetting_factor,
                                      double initial_covariance) {
    if (peak_displacements.size() != pressures.size()) {
        throw ValidationError("per-turn features and pressures differ in length");
    }
    return run_stream(peak_displacements.size(), forgetting_factor, initial_covariance,
                      [&](std::size_t i) -> std::optional<Measurement> {
                          if (!peak_displacements[i]) return std::nullopt;
                          return load_measurement(model, *peak_displacements[i], pressures[i]);
                      });
}

LoadStreamResult smooth_load_stream(std::span<const std::optional<double>> loads, double forgetting_factor,
                                    double initial_covariance) {
    return run_stream(loads.size(), forgetting_factor, initial_covariance,
                      [&](std::size_t i) -> std::optional<Measurement> {
                          if (!loads[i]) return std::nullopt;
                          return Measurement{*loads[i], 1.0};
                      });
}

}  // namespace tiresense::estimation
