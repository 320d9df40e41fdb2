#pragma once

#include <Eigen/Dense>

namespace tiresense::estimation {

struct LinearFit {
    Eigen::VectorXd coefficients;
    double residual_rms = 0.0;
};

/// Relative pivot tolerance on the (column-equilibrated) normal system.
inline constexpr double kRankTolerance = 1e-10;

/**
 * Ordinary least squares for design * beta ~= y.
 *
 * Columns are scaled to unit norm and solved by column-pivoted QR. The normal
 * system's pivots are the squared QR diagonal, so a pivot ratio below
 * kRankTolerance raises RankDeficiencyError.
 */
LinearFit ordinary_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y);

}  // namespace tiresense::estimation
