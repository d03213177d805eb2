#include <catch2/catch_amalgamated.hpp>

#include "metriclab/core.hpp"
#include "metriclab/random.hpp"
#include "metriclab/special_functions.hpp"

using namespace metriclab;

TEST_CASE("extended length arithmetic treats infinity as absorbing") {
    ExtendedLength a = ExtendedLength::finite(2.5);
    ExtendedLength inf = ExtendedLength::infinite();
    CHECK((a + inf).is_infinite());
    CHECK((inf + a).is_infinite());
    CHECK((a + ExtendedLength::finite(0.5)).value() == 3.0);
    CHECK(max(a, inf).is_infinite());
    CHECK(max(a, ExtendedLength::finite(1.0)).value() == 2.5);
    CHECK_THROWS_AS(ExtendedLength::finite(-1.0), std::invalid_argument);
    CHECK(ExtendedLength::of(std::numeric_limits<double>::infinity()).is_infinite());
}

TEST_CASE("max of extended lengths is monotone") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        double a = rng.uniform(0, 10), b = rng.uniform(0, 10), c = rng.uniform(0, 5);
        auto A = ExtendedLength::finite(a), B = ExtendedLength::finite(b);
        CHECK(!(max(A, B) < A));
        CHECK(!(max(A, B) < B));
        CHECK(!(max(A + ExtendedLength::finite(c), B) < max(A, B)));
    }
}

TEST_CASE("point equality is exact") {
    CHECK(point1(0.2) == point1(0.2));
    CHECK(point1(0.2) != point1(0.2 + 1e-16));  // same double, still equal
    CHECK(point1(0.2) != point2(0.2, 0.0));
    CHECK(point2(1, 2) == point2(1, 2));
}

TEST_CASE("laguerre recurrence basics") {
    CHECK(laguerre(0, 5.0) == 1.0);
    CHECK(laguerre(1, 0.0) == 1.0);
    CHECK(laguerre(2, 2.0) == Catch::Approx(-1.0).margin(1e-14));  // 1 - 2t + t^2/2
}

TEST_CASE("laguerre matches the direct summation oracle") {
    // L_n(t) = sum_k (-1)^k C(n,k) t^k / k!
    auto oracle = [](int n, double t) {
        double sum = 0.0, binom = 1.0, fact = 1.0, power = 1.0;
        for (int k = 0; k <= n; ++k) {
            if (k > 0) {
                binom = binom * (n - k + 1) / k;
                fact *= k;
                power *= t;
            }
            sum += ((k % 2 == 0) ? 1.0 : -1.0) * binom * power / fact;
        }
        return sum;
    };
    Rng rng(5);
    for (int n = 0; n <= 10; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            double t = rng.uniform(0.0, 8.0);
            double expected = oracle(n, t);
            CHECK(laguerre(n, t) ==
                  Catch::Approx(expected).epsilon(1e-9).margin(1e-12));
        }
    }
}

TEST_CASE("associated laguerre values") {
    CHECK(laguerre_associated(0, 1, 3.0) == 1.0);
    CHECK(laguerre_associated(1, 1, 0.0) == 2.0);        // 1 + alpha - t
    CHECK(laguerre_associated(2, 1, 0.0) == 3.0);        // L^1_2(0) = C(3,2)
    CHECK(laguerre_associated(2, 1, 1.0) == Catch::Approx(0.5));  // 3 - 3t + t^2/2
    CHECK_THROWS_AS(laguerre(65, 1.0), std::invalid_argument);
}

TEST_CASE("sinc values and bounds") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1.0) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sinc(0.5) == Catch::Approx(2.0 / std::numbers::pi).epsilon(1e-14));
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        double x = rng.uniform(-50, 50);
        CHECK(std::abs(sinc(x)) <= 1.0 + 1e-15);
    }
    // series switch agrees with the direct form at the boundary
    for (double x : {9.9e-5, 1.01e-4, 5e-5}) {
        double direct = std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
        CHECK(sinc(x) == Catch::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("one_minus_sinc_sq stays accurate near zero") {
    for (double x : {1e-8, 1e-6, 5e-5, 1e-3, 0.3}) {
        double v = one_minus_sinc_sq(x);
        CHECK(v > 0.0);
        double px = std::numbers::pi * x;
        CHECK(v == Catch::Approx(px * px / 3.0).epsilon(x < 1e-3 ? 1e-5 : 0.2));
    }
}

TEST_CASE("rng is deterministic and in range") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        double u = a.unit();
        CHECK(u == b.unit());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng c(43);
    CHECK(c.uniform_int(2, 5) >= 2);
    CHECK(c.uniform_int(2, 5) <= 5);
}
