#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace metriclab {

inline constexpr int kLaguerreMaxDegree = 64;

// Generalized Laguerre polynomial L_n^(alpha) by the three-term recurrence
//   (k+1) L_{k+1} = (2k+1+alpha-t) L_k - (k+alpha) L_{k-1}.
inline double laguerre_associated(int n, int alpha, double t) {
    if (n < 0 || n > kLaguerreMaxDegree)
        throw std::invalid_argument("laguerre degree out of range");
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = 1.0 + alpha - t;
    for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0 + alpha - t) * p1 - (k + alpha) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

inline double laguerre(int n, double t) { return laguerre_associated(n, 0, t); }

// Normalized cardinal sine, sin(pi x)/(pi x) with sinc(0) = 1. The series
// branch keeps 1 - sinc(x)^2 accurate near zero.
inline double sinc(double x) {
    double px = std::numbers::pi * x;
    if (std::abs(x) < 1e-4) {
        double p2 = px * px;
        return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
    }
    return std::sin(px) / px;
}

// 1 - sinc(x)^2, series-expanded near zero where the direct form cancels.
inline double one_minus_sinc_sq(double x) {
    double px = std::numbers::pi * x;
    double p2 = px * px;
    if (std::abs(x) < 1e-4) {
        // 1 - sinc^2 = p2/3 - 2 p2^2/45 + p2^3/315 - ...
        return p2 / 3.0 - 2.0 * p2 * p2 / 45.0 + p2 * p2 * p2 / 315.0;
    }
    double s = std::sin(px) / px;
    return 1.0 - s * s;
}

}  // namespace metriclab
