#include "tiresense/estimation/patch_model.hpp"

#include <cmath>

#include "tiresense/error.hpp"
#include "tiresense/estimation/least_squares.hpp"

namespace tiresense::estimation {

PatchLoadModel fit_patch_load_model(std::span<const PatchLoadSample> samples, double reference_pressure,
                                    double reference_tread) {
    if (samples.size() < 2) throw RankDeficiencyError("patch load model needs at least 2 samples");
    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd x(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        x(i, 0) = 1.0;
        x(i, 1) = s.patch_length;
        y[i] = s.load;
    }
    const LinearFit fit = ordinary_least_squares(x, y);

    PatchLoadModel m;
    m.q0 = fit.coefficients[0];
    m.q1 = fit.coefficients[1];
    m.reference_pressure = reference_pressure;
    m.reference_tread = reference_tread;
    m.fit_residual_rms = fit.residual_rms;
    m.patch_range = Interval::hull(samples, [](const auto& s) { return s.patch_length; });
    m.load_range = Interval::hull(samples, [](const auto& s) { return s.load; });
    return m;
}

PatchLoadEstimate estimate_load_patch(const PatchLoadModel& model, double patch_length) {
    if (!std::isfinite(patch_length)) throw ValidationError("patch length must be finite");
    return {model.q0 + model.q1 * patch_length, model.patch_range.contains(patch_length)};
}

}  // namespace tiresense::estimation
