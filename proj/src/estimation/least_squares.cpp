#include "tiresense/estimation/least_squares.hpp"

#include <cmath>

#include "tiresense/error.hpp"

namespace tiresense::estimation {

LinearFit ordinary_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& y) {
    const Eigen::Index rows = design.rows();
    const Eigen::Index cols = design.cols();
    if (rows != y.size()) throw ValidationError("design and target lengths differ");
    if (cols == 0) throw ValidationError("design has no columns");
    if (!design.allFinite() || !y.allFinite()) throw ValidationError("least-squares inputs must be finite");
    if (rows < cols) {
        throw RankDeficiencyError("need at least " + std::to_string(cols) + " samples, got " + std::to_string(rows));
    }

    const Eigen::VectorXd norms = design.colwise().norm();
    for (Eigen::Index j = 0; j < cols; ++j) {
        if (norms[j] == 0.0) throw RankDeficiencyError("design column " + std::to_string(j) + " is zero");
    }
    const Eigen::MatrixXd scaled = design * norms.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
    const double lead = std::abs(r(0, 0));
    for (Eigen::Index j = 0; j < cols; ++j) {
        const double ratio = std::abs(r(j, j)) / lead;
        if (!(ratio * ratio >= kRankTolerance)) throw RankDeficiencyError("least-squares design is rank deficient");
    }

    LinearFit fit;
    fit.coefficients = qr.solve(y).cwiseQuotient(norms);
    const Eigen::VectorXd residual = design * fit.coefficients - y;
    fit.residual_rms = std::sqrt(residual.squaredNorm() / static_cast<double>(rows));
    return fit;
}

}  // namespace tiresense::estimation
