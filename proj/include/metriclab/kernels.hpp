#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/special_functions.hpp"

namespace metriclab {

enum class KernelFamily {
    szego_disk,
    bergman_disk,
    bergman_halfplane,
    gaussian,
    fock,
    polyfock,
    paley_wiener,
    sobolev_green,
    min_kernel,
};

struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    double sigma = 1.0;      // gaussian width
    int degree = 1;          // polyfock order m, 1..64
    double halfwidth = 1.0;  // paley_wiener A
    int dim = 2;             // gaussian ambient dimension, 1 or 2
};

inline const char* kernel_family_name(KernelFamily f) {
    switch (f) {
        case KernelFamily::szego_disk: return "szego_disk";
        case KernelFamily::bergman_disk: return "bergman_disk";
        case KernelFamily::bergman_halfplane: return "bergman_halfplane";
        case KernelFamily::gaussian: return "gaussian";
        case KernelFamily::fock: return "fock";
        case KernelFamily::polyfock: return "polyfock";
        case KernelFamily::paley_wiener: return "paley_wiener";
        case KernelFamily::sobolev_green: return "sobolev_green";
        case KernelFamily::min_kernel: return "min_kernel";
    }
    return "?";
}

inline void validate(const KernelSpec& k) {
    switch (k.family) {
        case KernelFamily::gaussian:
            if (!(k.sigma > 0.0)) throw BadParams("gaussian: sigma must be positive");
            if (k.dim != 1 && k.dim != 2) throw BadParams("gaussian: dim must be 1 or 2");
            break;
        case KernelFamily::polyfock:
            if (k.degree < 1 || k.degree > kLaguerreMaxDegree)
                throw BadParams("polyfock: m must be in [1, 64]");
            break;
        case KernelFamily::paley_wiener:
            if (!(k.halfwidth > 0.0)) throw BadParams("paley_wiener: A must be positive");
            break;
        default:
            break;
    }
}

inline int kernel_dimension(const KernelSpec& k) {
    switch (k.family) {
        case KernelFamily::szego_disk:
        case KernelFamily::bergman_disk:
        case KernelFamily::bergman_halfplane:
        case KernelFamily::fock:
        case KernelFamily::polyfock:
            return 2;
        case KernelFamily::gaussian:
            return k.dim;
        case KernelFamily::paley_wiener:
        case KernelFamily::sobolev_green:
        case KernelFamily::min_kernel:
            return 1;
    }
    return 1;
}

inline bool kernel_carrier_contains(const KernelSpec& k, const Point& p) {
    if (p.dim != kernel_dimension(k)) return false;
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    switch (k.family) {
        case KernelFamily::szego_disk:
        case KernelFamily::bergman_disk:
            return std::hypot(p.x, p.y) < 1.0 - kCarrierGuard;
        case KernelFamily::bergman_halfplane:
            return p.y > kCarrierGuard;
        case KernelFamily::gaussian:
        case KernelFamily::fock:
        case KernelFamily::polyfock:
        case KernelFamily::paley_wiener:
            return true;
        case KernelFamily::sobolev_green:
            return p.x > kCarrierGuard && p.x < 1.0 - kCarrierGuard;
        case KernelFamily::min_kernel:
            return p.x > kCarrierGuard && p.x <= 1.0 + kCarrierGuard;
    }
    return false;
}

inline void kernel_require_point(const KernelSpec& k, const Point& p) {
    if (!kernel_carrier_contains(k, p))
        throw CarrierViolation(std::string(kernel_family_name(k.family)) +
                               ": point outside carrier: " + format_point(p));
}

// Kernel evaluation, K(x, y). Diagonal values are real and positive on the
// carrier for every catalog family.
inline std::complex<double> kernel_eval(const KernelSpec& k, const Point& x, const Point& y) {
    validate(k);
    kernel_require_point(k, x);
    kernel_require_point(k, y);
    const std::complex<double> w = to_complex(x);
    const std::complex<double> z = to_complex(y);
    switch (k.family) {
        case KernelFamily::szego_disk:
            return 1.0 / (1.0 - w * std::conj(z));
        case KernelFamily::bergman_disk: {
            std::complex<double> q = 1.0 - w * std::conj(z);
            return 1.0 / (std::numbers::pi * q * q);
        }
        case KernelFamily::bergman_halfplane: {
            std::complex<double> q = w - std::conj(z);
            return -1.0 / (std::numbers::pi * q * q);
        }
        case KernelFamily::gaussian: {
            double dx = x.x - y.x;
            double dy = (k.dim == 2) ? x.y - y.y : 0.0;
            double s = dx * dx + dy * dy;
            return std::exp(-k.sigma * k.sigma * s);
        }
        case KernelFamily::fock:
            return std::exp(w * std::conj(z));
        case KernelFamily::polyfock: {
            double s = std::norm(w - z);
            return std::exp(w * std::conj(z)) * laguerre_associated(k.degree - 1, 1, s);
        }
        case KernelFamily::paley_wiener:
            return 2.0 * k.halfwidth * sinc(2.0 * k.halfwidth * (x.x - y.x));
        case KernelFamily::sobolev_green: {
            double lo = std::min(x.x, y.x), hi = std::max(x.x, y.x);
            return (1.0 - hi) * lo;
        }
        case KernelFamily::min_kernel:
            return std::min(x.x, y.x);
    }
    throw UnknownFamily("kernel_eval: unknown family");
}

namespace detail {

// |K(x,y)|^2 / (K(x,x) K(y,y)) with family-specific forms where the direct
// quotient would lose precision near the diagonal.
inline double kernel_diag_ratio(const KernelSpec& k, const Point& x, const Point& y) {
    switch (k.family) {
        case KernelFamily::gaussian: {
            double dx = x.x - y.x;
            double dy = (k.dim == 2) ? x.y - y.y : 0.0;
            double s = dx * dx + dy * dy;
            return std::exp(-2.0 * k.sigma * k.sigma * s);
        }
        case KernelFamily::fock: {
            double s = std::norm(to_complex(x) - to_complex(y));
            return std::exp(-s);
        }
        case KernelFamily::polyfock: {
            double s = std::norm(to_complex(x) - to_complex(y));
            double lm = laguerre_associated(k.degree - 1, 1, s) / k.degree;
            return std::exp(-s) * lm * lm;
        }
        default: {
            double kxx = kernel_eval(k, x, x).real();
            double kyy = kernel_eval(k, y, y).real();
            if (!(kxx > 0.0) || !(kyy > 0.0))
                throw NonPositiveDiagonal(std::string(kernel_family_name(k.family)) +
                                          ": K(x,x) <= 0");
            return std::norm(kernel_eval(k, x, y)) / (kxx * kyy);
        }
    }
}

}  // namespace detail

// The distance induced by a strictly positive kernel,
//   d_K(x,y) = sqrt(1 - |K(x,y)|^2 / (K(x,x) K(y,y))).
// The radicand is clamped at zero against floating-point noise near the
// diagonal, and x == y short-circuits to exactly 0.
inline double kernel_distance(const KernelSpec& k, const Point& x, const Point& y) {
    validate(k);
    kernel_require_point(k, x);
    kernel_require_point(k, y);
    if (x == y) return 0.0;
    if (k.family == KernelFamily::paley_wiener) {
        // direct 1 - sinc^2 keeps accuracy near the diagonal
        return std::sqrt(one_minus_sinc_sq(2.0 * k.halfwidth * (x.x - y.x)));
    }
    double ratio = detail::kernel_diag_ratio(k, x, y);
    return std::sqrt(std::max(0.0, 1.0 - ratio));
}

namespace detail {

// Smallest eigenvalue of a Hermitian matrix by the cyclic Jacobi method.
// Sizes stay tiny (n <= 64), so no external solver is needed.
inline double hermitian_min_eigenvalue(std::vector<std::vector<std::complex<double>>> a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n == 1) return a[0][0].real();

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
    if (scale == 0.0) return 0.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p][q]);
        if (std::sqrt(off) < 1e-14 * scale * n) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                std::complex<double> apq = a[p][q];
                double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                // Unitary 2x2 rotation eliminating a[p][q]:
                //   phase e^{i phi} = apq / |apq|, then a real Jacobi rotation.
                std::complex<double> phase = apq / mag;
                double app = a[p][p].real();
                double aqq = a[q][q].real();
                double theta = (aqq - app) / (2.0 * mag);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                // Columns/rows update: new basis vectors
                //   e_p' = c e_p - s conj(phase) e_q, e_q' = s phase e_p + c e_q.
                for (std::size_t i = 0; i < n; ++i) {
                    std::complex<double> aip = a[i][p];
                    std::complex<double> aiq = a[i][q];
                    a[i][p] = c * aip - s * std::conj(phase) * aiq;
                    a[i][q] = s * phase * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    std::complex<double> apj = a[p][j];
                    std::complex<double> aqj = a[q][j];
                    a[p][j] = c * apj - s * phase * aqj;
                    a[q][j] = s * std::conj(phase) * apj + c * aqj;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    double mn = a[0][0].real();
    for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, a[i][i].real());
    return mn;
}

}  // namespace detail

// Smallest eigenvalue of the Hermitian Gram matrix [K(x_r, x_s)]. A positive
// value certifies strict positivity of the kernel on the given point set.
inline double gram_min_eigenvalue(const KernelSpec& k, std::span<const Point> points) {
    validate(k);
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("gram_min_eigenvalue: empty point set");
    if (n > 64) throw std::invalid_argument("gram_min_eigenvalue: at most 64 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw DuplicatePoints("gram_min_eigenvalue: points must be pairwise distinct");

    std::vector<std::vector<std::complex<double>>> g(n, std::vector<std::complex<double>>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = r; s < n; ++s) {
            std::complex<double> v = kernel_eval(k, points[r], points[s]);
            g[r][s] = v;
            g[s][r] = std::conj(v);
        }
        g[r][r] = g[r][r].real();
    }
    return detail::hermitian_min_eigenvalue(std::move(g));
}

}  // namespace metriclab
