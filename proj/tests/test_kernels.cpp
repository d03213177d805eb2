#include <catch2/catch_amalgamated.hpp>

#include "metriclab/kernels.hpp"
#include "metriclab/random.hpp"
#include "metriclab/spaces.hpp"

using namespace metriclab;

namespace {

KernelSpec kernel_of(KernelFamily f) {
    KernelSpec k;
    k.family = f;
    return k;
}

// Closed-form eigenvalues of a real symmetric 3x3 matrix (trigonometric
// method); independent oracle for the Jacobi solver.
std::array<double, 3> sym3_eigenvalues(double a11, double a12, double a13, double a22, double a23,
                                       double a33) {
    double q = (a11 + a22 + a33) / 3.0;
    double b11 = a11 - q, b22 = a22 - q, b33 = a33 - q;
    double p2 = b11 * b11 + b22 * b22 + b33 * b33 + 2.0 * (a12 * a12 + a13 * a13 + a23 * a23);
    double p = std::sqrt(p2 / 6.0);
    if (p < 1e-300) return {q, q, q};
    // det(B / p) / 2
    double c11 = b11 / p, c22 = b22 / p, c33 = b33 / p;
    double c12 = a12 / p, c13 = a13 / p, c23 = a23 / p;
    double detb = c11 * (c22 * c33 - c23 * c23) - c12 * (c12 * c33 - c23 * c13) +
                  c13 * (c12 * c23 - c22 * c13);
    double r = std::clamp(detb / 2.0, -1.0, 1.0);
    double phi = std::acos(r) / 3.0;
    double e1 = q + 2.0 * p * std::cos(phi);
    double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    double e2 = 3.0 * q - e1 - e3;
    return {e1, e2, e3};
}

}  // namespace

TEST_CASE("kernel evaluation examples") {
    CHECK(kernel_eval(kernel_of(KernelFamily::min_kernel), point1(0.3), point1(0.7)).real() ==
          Catch::Approx(0.3));
    CHECK(kernel_eval(kernel_of(KernelFamily::sobolev_green), point1(0.5), point1(0.25)).real() ==
          Catch::Approx(0.125));  // (1-x) y with y <= x
    CHECK(kernel_eval(kernel_of(KernelFamily::fock), point2(0, 0), point2(0, 0)).real() == 1.0);
    CHECK(kernel_eval(kernel_of(KernelFamily::paley_wiener), point1(0.3), point1(0.3)).real() ==
          Catch::Approx(2.0));
}

TEST_CASE("kernel diagonals are real and positive") {
    Rng rng(71);
    for (auto f : {KernelFamily::szego_disk, KernelFamily::bergman_disk,
                   KernelFamily::bergman_halfplane, KernelFamily::gaussian, KernelFamily::fock,
                   KernelFamily::polyfock, KernelFamily::paley_wiener,
                   KernelFamily::sobolev_green, KernelFamily::min_kernel}) {
        KernelSpec spec = kernel_of(f);
        if (f == KernelFamily::polyfock) spec.degree = 4;
        for (int i = 0; i < 100; ++i) {
            Point p;
            switch (f) {
                case KernelFamily::szego_disk:
                case KernelFamily::bergman_disk:
                    p = point2(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
                    break;
                case KernelFamily::bergman_halfplane:
                    p = point2(rng.uniform(-2, 2), rng.uniform(0.1, 3));
                    break;
                case KernelFamily::gaussian:
                case KernelFamily::fock:
                case KernelFamily::polyfock:
                    p = point2(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
                    break;
                default:
                    p = point1(rng.uniform(0.05, 0.95));
            }
            auto v = kernel_eval(spec, p, p);
            CHECK(v.imag() == Catch::Approx(0.0).margin(1e-14));
            CHECK(v.real() > 0.0);
        }
    }
}

TEST_CASE("kernel distance examples") {
    KernelSpec g = kernel_of(KernelFamily::gaussian);
    g.dim = 1;
    CHECK(kernel_distance(g, point1(0), point1(1)) ==
          Catch::Approx(std::sqrt(1.0 - std::exp(-2.0))).epsilon(1e-14));
    CHECK(kernel_distance(g, point1(0.4), point1(0.4)) == 0.0);
    // Fock closed form sqrt(1 - exp(-|z-w|^2))
    KernelSpec fock = kernel_of(KernelFamily::fock);
    Rng rng(73);
    for (int i = 0; i < 500; ++i) {
        Point w = point2(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2));
        Point z = point2(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2));
        double s = std::norm(to_complex(w) - to_complex(z));
        CHECK(kernel_distance(fock, w, z) ==
              Catch::Approx(std::sqrt(-std::expm1(-s))).margin(1e-12));
    }
    // Paley-Wiener closed form sqrt(1 - sinc^2(2A(t-s)))
    KernelSpec pw = kernel_of(KernelFamily::paley_wiener);
    pw.halfwidth = 1.5;
    for (int i = 0; i < 500; ++i) {
        double s = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
        double sv = sinc(2.0 * pw.halfwidth * (t - s));
        CHECK(kernel_distance(pw, point1(s), point1(t)) ==
              Catch::Approx(std::sqrt(std::max(0.0, 1.0 - sv * sv))).margin(1e-12));
    }
}

TEST_CASE("sobolev kernel distance: generic definition and simplified form agree") {
    KernelSpec sob = kernel_of(KernelFamily::sobolev_green);
    Rng rng(79);
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(0.02, 0.98), y = rng.uniform(0.02, 0.98);
        if (x == y) continue;
        double lo = std::min(x, y), hi = std::max(x, y);
        // simplify 1 - K(x,y)^2/(K(x,x)K(y,y)) with K = min(1-max)(min):
        // the quotient telescopes to (hi - lo) / ((1 - lo) hi)
        double simplified = std::sqrt((hi - lo) / ((1.0 - lo) * hi));
        CHECK(kernel_distance(sob, point1(x), point1(y)) ==
              Catch::Approx(simplified).epsilon(1e-12));
    }
    // spot value: the generic definition at (0.25, 0.5)
    CHECK(kernel_distance(sob, point1(0.25), point1(0.5)) ==
          Catch::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
    // d_K dominates the square-root distance, the divergence driver
    for (int i = 0; i < 500; ++i) {
        double x = rng.uniform(0.02, 0.98), y = rng.uniform(0.02, 0.98);
        CHECK(kernel_distance(sob, point1(x), point1(y)) >=
              std::sqrt(std::abs(x - y)) - 1e-12);
    }
}

TEST_CASE("min-kernel distance closed form") {
    KernelSpec mk = kernel_of(KernelFamily::min_kernel);
    Rng rng(83);
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(0.02, 1.0), y = rng.uniform(0.02, 1.0);
        if (x == y) continue;
        double lo = std::min(x, y), hi = std::max(x, y);
        CHECK(kernel_distance(mk, point1(x), point1(y)) ==
              Catch::Approx(std::sqrt((hi - lo) / hi)).epsilon(1e-12));
    }
}

TEST_CASE("szego distance equals the pseudohyperbolic distance") {
    KernelSpec sz = kernel_of(KernelFamily::szego_disk);
    MetricSpace rho = make_space(SpaceFamily::pseudohyperbolic_disk);
    Rng rng(89);
    for (int i = 0; i < 2000; ++i) {
        Point w = point2(rng.uniform(-0.65, 0.65), rng.uniform(-0.65, 0.65));
        Point z = point2(rng.uniform(-0.65, 0.65), rng.uniform(-0.65, 0.65));
        CHECK(std::abs(kernel_distance(sz, w, z) - rho.distance(w, z)) <= 1e-12);
    }
}

TEST_CASE("bergman distances factor through f(t) = t sqrt(2 - t^2)") {
    Rng rng(97);
    KernelSpec bd = kernel_of(KernelFamily::bergman_disk);
    MetricSpace rho_d = make_space(SpaceFamily::pseudohyperbolic_disk);
    for (int i = 0; i < 2000; ++i) {
        Point w = point2(rng.uniform(-0.65, 0.65), rng.uniform(-0.65, 0.65));
        Point z = point2(rng.uniform(-0.65, 0.65), rng.uniform(-0.65, 0.65));
        double t = rho_d.distance(w, z);
        CHECK(std::abs(kernel_distance(bd, w, z) - t * std::sqrt(2.0 - t * t)) <= 1e-12);
    }
    KernelSpec bh = kernel_of(KernelFamily::bergman_halfplane);
    MetricSpace rho_h = make_space(SpaceFamily::pseudohyperbolic_halfplane);
    for (int i = 0; i < 2000; ++i) {
        Point w = point2(rng.uniform(-2, 2), rng.uniform(0.2, 3));
        Point z = point2(rng.uniform(-2, 2), rng.uniform(0.2, 3));
        double t = rho_h.distance(w, z);
        CHECK(std::abs(kernel_distance(bh, w, z) - t * std::sqrt(2.0 - t * t)) <= 1e-12);
    }
}

TEST_CASE("gaussian distance has slope sqrt(2) sigma at the diagonal") {
    for (double sigma : {0.5, 1.0, 2.0}) {
        KernelSpec g = kernel_of(KernelFamily::gaussian);
        g.sigma = sigma;
        g.dim = 2;
        double prev_err = 1.0;
        for (int j = 4; j <= 14; j += 2) {
            double r = std::ldexp(1.0, -j);
            Point x = point2(r / std::sqrt(2.0), r / std::sqrt(2.0));
            double ratio =
                kernel_distance(g, x, point2(0, 0)) / (std::sqrt(2.0) * sigma * r);
            double err = std::abs(ratio - 1.0);
            CHECK(err <= prev_err + 1e-12);  // ladder converges monotonically
            prev_err = err;
        }
        CHECK(prev_err <= 1e-4);
    }
}

TEST_CASE("gram matrix eigenvalues") {
    // 1x1 gram equals the diagonal value
    KernelSpec mk = kernel_of(KernelFamily::min_kernel);
    std::vector<Point> one{point1(0.37)};
    CHECK(gram_min_eigenvalue(mk, one) == Catch::Approx(0.37));

    // 3x3 min-kernel gram against the closed-form symmetric eigensolver
    std::vector<Point> three{point1(0.25), point1(0.5), point1(0.75)};
    auto eigs = sym3_eigenvalues(0.25, 0.25, 0.25, 0.5, 0.5, 0.75);
    double expected = std::min({eigs[0], eigs[1], eigs[2]});
    double got = gram_min_eigenvalue(mk, three);
    CHECK(got == Catch::Approx(expected).margin(1e-10));
    CHECK(got > 0.0);
    CHECK(got == Catch::Approx(0.0769946).margin(1e-6));

    // gaussian gram on random planar points is positive definite
    KernelSpec g = kernel_of(KernelFamily::gaussian);
    Rng rng(101);
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(point2(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    CHECK(gram_min_eigenvalue(g, pts) > 0.0);

    std::vector<Point> dup{point1(0.5), point1(0.5)};
    CHECK_THROWS_AS(gram_min_eigenvalue(mk, dup), DuplicatePoints);
}

TEST_CASE("hermitian jacobi matches a constructed spectrum") {
    // U diag(lambda) U* for a hand-built unitary from Gram-Schmidt
    Rng rng(103);
    const int n = 6;
    std::vector<std::vector<std::complex<double>>> u(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i][j] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (int j = 0; j < n; ++j) {  // orthonormalize columns
        for (int k = 0; k < j; ++k) {
            std::complex<double> dot = 0;
            for (int i = 0; i < n; ++i) dot += std::conj(u[i][k]) * u[i][j];
            for (int i = 0; i < n; ++i) u[i][j] -= dot * u[i][k];
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += std::norm(u[i][j]);
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) u[i][j] /= nrm;
    }
    std::vector<double> lambda{-2.0, -0.5, 0.037, 1.0, 4.5, 9.0};
    std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> sum = 0;
            for (int k = 0; k < n; ++k) sum += u[i][k] * lambda[k] * std::conj(u[j][k]);
            a[i][j] = sum;
        }
    CHECK(detail::hermitian_min_eigenvalue(a) == Catch::Approx(-2.0).margin(1e-10));
}

TEST_CASE("gram matrices of all catalog kernels stay positive semidefinite") {
    Rng rng(107);
    for (auto f : {KernelFamily::szego_disk, KernelFamily::bergman_disk,
                   KernelFamily::bergman_halfplane, KernelFamily::gaussian, KernelFamily::fock,
                   KernelFamily::polyfock, KernelFamily::paley_wiener,
                   KernelFamily::sobolev_green, KernelFamily::min_kernel}) {
        KernelSpec spec = kernel_of(f);
        if (f == KernelFamily::polyfock) spec.degree = 2;
        for (int trial = 0; trial < 3; ++trial) {
            int count = 4 + 4 * trial;  // up to 12 <= 16 points
            std::vector<Point> pts;
            while (static_cast<int>(pts.size()) < count) {
                Point p;
                switch (f) {
                    case KernelFamily::szego_disk:
                    case KernelFamily::bergman_disk:
                        p = point2(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
                        break;
                    case KernelFamily::bergman_halfplane:
                        p = point2(rng.uniform(-2, 2), rng.uniform(0.3, 2.5));
                        break;
                    case KernelFamily::gaussian:
                        p = point2(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
                        break;
                    case KernelFamily::fock:
                    case KernelFamily::polyfock:
                        p = point2(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
                        break;
                    case KernelFamily::paley_wiener:
                        p = point1(rng.uniform(-2, 2));
                        break;
                    default:
                        p = point1(rng.uniform(0.05, 0.95));
                }
                bool dup = false;
                for (const auto& q : pts) dup = dup || q == p;
                if (!dup) pts.push_back(p);
            }
            INFO(kernel_family_name(f));
            CHECK(gram_min_eigenvalue(spec, pts) >= -1e-10);
        }
    }
}

TEST_CASE("kernel parameter validation") {
    KernelSpec pf = kernel_of(KernelFamily::polyfock);
    pf.degree = 0;
    CHECK_THROWS_AS(kernel_eval(pf, point2(0, 0), point2(0, 0)), BadParams);
    KernelSpec pw = kernel_of(KernelFamily::paley_wiener);
    pw.halfwidth = 0.0;
    CHECK_THROWS_AS(kernel_distance(pw, point1(0), point1(1)), BadParams);
    CHECK_THROWS_AS(kernel_eval(kernel_of(KernelFamily::min_kernel), point1(0.0), point1(0.5)),
                    CarrierViolation);
}
