#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "tiresense/sim/simulator.hpp"

namespace tiresense::test {

inline sim::SensorSpec clean_sensor() { return {10000.0, 0.0, {0.0, 0.0, 0.0}, 1}; }

/// Coefficient of determination of the least-squares line through (x, y).
inline double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy * sxy / (sxx * syy);
}

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    return std::sqrt(r_squared(a, b)) * ((std::inner_product(a.begin(), a.end(), b.begin(), 0.0) >= 0.0) ? 1.0 : -1.0);
}

/// Amplitude and phase (rad) of the best-fit sinusoid a sin(wt) + b cos(wt) + c.
struct SineFit {
    double amplitude = 0.0;
    double phase = 0.0;
};

inline SineFit fit_sine(const std::vector<double>& y, double omega, double fs, std::size_t from, std::size_t to) {
    // 3x3 normal equations for [sin, cos, 1]
    double m[3][3] = {}, r[3] = {};
    for (std::size_t i = from; i < to; ++i) {
        const double t = static_cast<double>(i) / fs;
        const double basis[3] = {std::sin(omega * t), std::cos(omega * t), 1.0};
        for (int a = 0; a < 3; ++a) {
            r[a] += basis[a] * y[i];
            for (int b = 0; b < 3; ++b) m[a][b] += basis[a] * basis[b];
        }
    }
    // Gaussian elimination, tiny fixed system
    for (int k = 0; k < 3; ++k) {
        for (int i = k + 1; i < 3; ++i) {
            const double f = m[i][k] / m[k][k];
            for (int j = k; j < 3; ++j) m[i][j] -= f * m[k][j];
            r[i] -= f * r[k];
        }
    }
    double x[3];
    for (int i = 2; i >= 0; --i) {
        double s = r[i];
        for (int j = i + 1; j < 3; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return {std::hypot(x[0], x[1]), std::atan2(x[1], x[0])};
}

}  // namespace tiresense::test
