#include <catch2/catch_amalgamated.hpp>

#include "metriclab/intrinsic.hpp"
#include "metriclab/random.hpp"

using namespace metriclab;

namespace {

EstimatorConfig fast_config() {
    EstimatorConfig c;
    c.segments = 16;
    c.relax_rounds = 60;
    return c;
}

}  // namespace

TEST_CASE("straight paths") {
    MetricSpace halfline = make_space(SpaceFamily::pseudolog_halfline);
    Path p = straight_path(halfline, point1(1), point1(2));
    CHECK(p.eval(0.5).x == Catch::Approx(1.5));

    MetricSpace comb = make_space(SpaceFamily::comb_intrinsic);
    Path cp = straight_path(comb, point2(0, 0), point2(0.5, 0.5));
    CHECK(cp.interpolation() == Interpolation::canonical);

    MetricSpace hook = make_space(SpaceFamily::hook_euclidean);
    Path hp = straight_path(hook, point2(1.5, 0), point2(0, 0.5));
    CHECK(hp.interpolation() == Interpolation::canonical);
}

TEST_CASE("relaxation straightens a Euclidean zigzag monotonically") {
    MetricSpace plane = make_space(SpaceFamily::euclidean_plane);
    std::vector<Point> zigzag;
    for (int i = 0; i <= 8; ++i) {
        double x = i / 8.0;
        zigzag.push_back(point2(x, (i % 2 == 0) ? 0.0 : 0.3));
    }
    zigzag.back() = point2(1, 0);
    Path path(plane, zigzag, Interpolation::ambient_linear);

    EstimatorConfig cfg = fast_config();
    double before = polygonal_length(path, Partition::uniform(0, 1, 64));
    Path relaxed = relax_path(path, cfg);
    double after = polygonal_length(relaxed, Partition::uniform(0, 1, 64));
    CHECK(after <= before);
    CHECK(after == Catch::Approx(1.0).margin(2e-3));
    CHECK(relaxed.control_points().front() == path.control_points().front());
    CHECK(relaxed.control_points().back() == path.control_points().back());
}

TEST_CASE("relaxed halfplane chord reaches the hyperbolic closed form") {
    MetricSpace h = make_space(SpaceFamily::pseudohyperbolic_halfplane);
    Point z = point2(0, 1), w = point2(1, 1);
    EstimatorConfig cfg;
    cfg.segments = 16;
    cfg.relax_rounds = 300;
    IntrinsicEstimate est = estimate_intrinsic(h, z, w, cfg);
    CHECK(est.status == LengthStatus::converged);
    CHECK(est.upper_bound.value() == Catch::Approx(0.4812118250596035).margin(1e-3));
}

TEST_CASE("estimate is zero at identical endpoints") {
    MetricSpace disk = make_space(SpaceFamily::pseudohyperbolic_disk);
    IntrinsicEstimate est = estimate_intrinsic(disk, point2(0.2, 0.1), point2(0.2, 0.1));
    CHECK(est.status == LengthStatus::converged);
    CHECK(est.upper_bound.value() == 0.0);
    CHECK(est.iterations == 0);
}

TEST_CASE("pseudolog estimates match the logarithmic closed form") {
    MetricSpace halfline = make_space(SpaceFamily::pseudolog_halfline);
    for (auto [x, y] : {std::pair{1.0, 2.0}, {0.5, 4.0}}) {
        IntrinsicEstimate est = estimate_intrinsic(halfline, point1(x), point1(y), fast_config());
        double expected = std::abs(std::log(y) - std::log(x));
        CHECK(est.status == LengthStatus::converged);
        CHECK(est.upper_bound.value() == Catch::Approx(expected).epsilon(1e-4));
    }
}

TEST_CASE("estimates diverge where the intrinsic distance is infinite") {
    EstimatorConfig cfg = fast_config();
    cfg.relax_rounds = 10;
    CHECK(estimate_intrinsic(make_space(SpaceFamily::sqrt_line), point1(0), point1(1), cfg)
              .status == LengthStatus::diverged);
    CHECK(estimate_intrinsic(make_space(SpaceFamily::discrete), point1(0), point1(1), cfg)
              .status == LengthStatus::diverged);
}

TEST_CASE("comb and hook estimates are exact via canonical paths") {
    IntrinsicEstimate comb = estimate_intrinsic(make_space(SpaceFamily::comb_euclidean),
                                                point2(0, 0), point2(0.5, 0.5), fast_config());
    CHECK(comb.status == LengthStatus::converged);
    CHECK(comb.upper_bound.value() == Catch::Approx(1.0).epsilon(1e-12));

    IntrinsicEstimate hook = estimate_intrinsic(make_space(SpaceFamily::hook_euclidean),
                                                point2(2, 0), point2(0, 1), fast_config());
    CHECK(hook.status == LengthStatus::converged);
    CHECK(hook.upper_bound.value() == Catch::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("estimates stay above closed forms up to tolerance") {
    Rng rng(131);
    MetricSpace disk = make_space(SpaceFamily::pseudohyperbolic_disk);
    EstimatorConfig cfg;
    cfg.segments = 32;
    cfg.relax_rounds = 200;
    for (int i = 0; i < 5; ++i) {
        Point z = point2(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        Point w = point2(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        double closed = disk.closed_form_intrinsic(z, w).value();
        IntrinsicEstimate est = estimate_intrinsic(disk, z, w, cfg);
        CHECK(est.upper_bound.value() >= closed - 1e-3 * (1.0 + closed));
    }
}

TEST_CASE("intrinsic ratio of pseudolog segment vs euclidean stays in [1/2, 1]") {
    MetricSpace seg = make_space(SpaceFamily::pseudolog_segment);  // [1, 2]
    Rng rng(137);
    for (int i = 0; i < 2000; ++i) {
        double x = rng.uniform(1, 2), y = rng.uniform(1, 2);
        if (x == y) continue;
        double rho_star = seg.closed_form_intrinsic(point1(x), point1(y)).value();
        double euclid = std::abs(x - y);
        double ratio = rho_star / euclid;
        CHECK(ratio >= 0.5 - 1e-12);
        CHECK(ratio <= 1.0 + 1e-12);
    }
}

TEST_CASE("estimator is deterministic") {
    MetricSpace h = make_space(SpaceFamily::pseudohyperbolic_halfplane);
    EstimatorConfig cfg = fast_config();
    IntrinsicEstimate a = estimate_intrinsic(h, point2(-1, 0.5), point2(1, 2), cfg);
    IntrinsicEstimate b = estimate_intrinsic(h, point2(-1, 0.5), point2(1, 2), cfg);
    CHECK(a.upper_bound.value() == b.upper_bound.value());
    CHECK(a.iterations == b.iterations);
    REQUIRE(a.path.control_points().size() == b.path.control_points().size());
    for (std::size_t i = 0; i < a.path.control_points().size(); ++i)
        CHECK(a.path.control_points()[i] == b.path.control_points()[i]);
}

TEST_CASE("relaxation never increases the path energy") {
    MetricSpace disk = make_space(SpaceFamily::pseudohyperbolic_disk);
    Path cur = resample_path(straight_path(disk, point2(-0.6, 0), point2(0.6, 0)), 8);
    EstimatorConfig cfg = fast_config();
    auto energy = [&](const Path& p) {
        double sum = 0.0;
        const auto& c = p.control_points();
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            sum += detail::segment_energy(disk, c[i], c[i + 1]);
        return sum;
    };
    double prev = energy(cur);
    for (int round = 0; round < 4; ++round) {
        EstimatorConfig one = cfg;
        one.relax_rounds = 5;
        cur = relax_path(cur, one);
        double e = energy(cur);
        CHECK(e <= prev + 1e-15);
        prev = e;
    }
}

TEST_CASE("verify_theorem_instance on identical spaces reports tiny gaps") {
    MetricSpace line = make_space(SpaceFamily::euclidean_line);
    std::vector<std::pair<Point, Point>> pairs{{point1(0), point1(1)},
                                               {point1(-2), point1(0.5)}};
    ComparisonReport rep = verify_theorem_instance(line, line, pairs, fast_config(), 1e-9);
    CHECK(rep.pass);
    CHECK(rep.max_rel_gap <= 1e-9);
    CHECK(rep.rows.size() == 2);
    CHECK(rep.rows[0].reference_is_closed_form);
}

TEST_CASE("finite estimates dominate the endpoint distance") {
    Rng rng(149);
    MetricSpace spaces[] = {make_space(SpaceFamily::pseudolog_halfline),
                            make_space(SpaceFamily::pseudohyperbolic_disk),
                            make_space(KernelFamily::fock)};
    EstimatorConfig cfg = fast_config();
    for (int trial = 0; trial < 9; ++trial) {
        const MetricSpace& s = spaces[trial % 3];
        auto draw = [&]() -> Point {
            if (!s.is_kernel_backed() &&
                s.space_spec()->family == SpaceFamily::pseudolog_halfline)
                return point1(rng.uniform(0.5, 3));
            while (true) {
                Point p = point2(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
                if (s.contains(p)) return p;
            }
        };
        Point x = draw(), y = draw();
        IntrinsicEstimate est = estimate_intrinsic(s, x, y, cfg);
        if (est.upper_bound.is_finite())
            CHECK(est.upper_bound.value() >= s.distance(x, y) - 1e-10);
    }
}

TEST_CASE("verify_theorem_instance rejects mismatched carriers") {
    MetricSpace line = make_space(SpaceFamily::euclidean_line);
    MetricSpace plane = make_space(SpaceFamily::euclidean_plane);
    std::vector<std::pair<Point, Point>> pairs{{point1(0), point1(1)}};
    CHECK_THROWS_AS(verify_theorem_instance(line, plane, pairs, EstimatorConfig{}, 1e-2),
                    BadParams);
}

TEST_CASE("estimator config validation") {
    EstimatorConfig bad;
    bad.segments = 0;
    CHECK_THROWS_AS(validate(bad), BadParams);
    bad = EstimatorConfig{};
    bad.segments = 5000;
    CHECK_THROWS_AS(validate(bad), BadParams);
    bad = EstimatorConfig{};
    bad.length_tol = 0.0;
    CHECK_THROWS_AS(validate(bad), BadParams);
}
