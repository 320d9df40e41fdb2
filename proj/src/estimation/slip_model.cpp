#include "tiresense/estimation/slip_model.hpp"

#include <algorithm>
#include <cmath>

#include "tiresense/error.hpp"
#include "tiresense/estimation/least_squares.hpp"

namespace tiresense::estimation {
namespace {

constexpr double kClampMargin = 0.2;

}  // namespace

SlipModel fit_slip_model(std::span<const SlipSample> samples) {
    if (samples.size() < 3) throw RankDeficiencyError("slip model needs at least 3 samples");
    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd x(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        x.row(i) << 1.0, s.peak_lateral, s.lateral_slope;
        y[i] = s.slip;
    }
    const LinearFit fit = ordinary_least_squares(x, y);

    SlipModel m;
    m.beta0 = fit.coefficients[0];
    m.beta1 = fit.coefficients[1];
    m.beta2 = fit.coefficients[2];
    m.fit_residual_rms = fit.residual_rms;
    m.slip_range = Interval::hull(samples, [](const auto& s) { return s.slip; });
    return m;
}

double predict_slip(const SlipModel& model, double peak_lateral, double lateral_slope) {
    if (!std::isfinite(peak_lateral) || !std::isfinite(lateral_slope)) {
        throw ValidationError("slip features must be finite");
    }
    const double raw = model.beta0 + model.beta1 * peak_lateral + model.beta2 * lateral_slope;
    const double margin = kClampMargin * model.slip_range.span();
    return std::clamp(raw, model.slip_range.lo - margin, model.slip_range.hi + margin);
}

}  // namespace tiresense::estimation
