#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "metriclab/axioms.hpp"
#include "metriclab/composition.hpp"
#include "metriclab/intrinsic.hpp"
#include "metriclab/random.hpp"
#include "metriclab/serialize.hpp"
#include "metriclab/similarity.hpp"

namespace metriclab {

struct ReproduceResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

namespace repro {

inline const double kSqrt2 = std::sqrt(2.0);

inline std::vector<std::pair<Point, Point>> seeded_halfplane_pairs(int count = 10) {
    Rng rng(0x48414c46u);
    std::vector<std::pair<Point, Point>> pairs;
    for (int i = 0; i < count; ++i) {
        Point a = point2(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 3.0));
        Point b = point2(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 3.0));
        pairs.emplace_back(a, b);
    }
    return pairs;
}

inline std::vector<std::pair<Point, Point>> seeded_disk_pairs(int count = 10) {
    Rng rng(0x4449534bu);
    auto draw = [&rng] {
        while (true) {
            double x = rng.uniform(-0.8, 0.8), y = rng.uniform(-0.8, 0.8);
            if (std::hypot(x, y) <= 0.8) return point2(x, y);
        }
    };
    std::vector<std::pair<Point, Point>> pairs;
    for (int i = 0; i < count; ++i) {
        Point a = draw(), b = draw();
        pairs.emplace_back(a, b);
    }
    return pairs;
}

inline EstimatorConfig geodesic_config() {
    EstimatorConfig c;
    c.segments = 64;
    c.relax_rounds = 1500;  // the pattern search exits early once its step floor is hit
    return c;
}

inline EstimatorConfig line_config() {
    EstimatorConfig c;
    c.segments = 16;
    c.relax_rounds = 40;
    return c;
}

inline ReproduceResult pseudolog_intrinsic() {
    MetricSpace space = make_space(SpaceFamily::pseudolog_halfline);
    const std::pair<double, double> pairs[] = {{1.0, 2.0}, {1.0, std::exp(1.0)}, {0.5, 4.0}};
    std::ostringstream os;
    bool pass = true;
    for (auto [x, y] : pairs) {
        IntrinsicEstimate est = estimate_intrinsic(space, point1(x), point1(y), line_config());
        double expected = std::abs(std::log(x) - std::log(y));
        double gap = std::abs(est.upper_bound.value() - expected) / expected;
        bool ok = est.status == LengthStatus::converged && gap <= 1e-4;
        pass = pass && ok;
        os << "  (" << format_g9(x) << ", " << format_g9(y) << "): est "
           << format_g9(est.upper_bound.value()) << " expected " << format_g9(expected)
           << " rel_gap " << format_g9(gap) << (ok ? "" : "  <-- FAIL") << "\n";
    }
    return {"pseudolog_intrinsic", pass, os.str()};
}

inline ReproduceResult estimate_vs_closed_form(const std::string& id, const MetricSpace& space,
                                               const MetricSpace& reference, double tol,
                                               const std::vector<std::pair<Point, Point>>& pairs) {
    ComparisonReport rep =
        verify_theorem_instance(space, reference, pairs, geodesic_config(), tol);
    std::ostringstream os;
    for (const auto& row : rep.rows)
        os << "  " << format_point(row.x) << " -> " << format_point(row.y) << ": est "
           << format_g9(row.estimate1) << " ref " << format_g9(row.reference2) << " rel_gap "
           << format_g9(row.rel_gap) << (row.pass ? "" : "  <-- FAIL") << "\n";
    os << "  max rel_gap " << format_g9(rep.max_rel_gap) << " (tol " << format_g9(tol) << ")\n";
    return {id, rep.pass, os.str()};
}

inline ReproduceResult hyperbolic_halfplane() {
    MetricSpace s = make_space(SpaceFamily::pseudohyperbolic_halfplane);
    return estimate_vs_closed_form("hyperbolic_halfplane", s, s, 1e-2, seeded_halfplane_pairs());
}

inline ReproduceResult hyperbolic_disk() {
    MetricSpace s = make_space(SpaceFamily::pseudohyperbolic_disk);
    return estimate_vs_closed_form("hyperbolic_disk", s, s, 1e-2, seeded_disk_pairs());
}

inline ReproduceResult bergman_disk() {
    return estimate_vs_closed_form("bergman_disk", make_space(KernelFamily::bergman_disk),
                                   make_space(SpaceFamily::pseudohyperbolic_disk, kSqrt2), 2e-2,
                                   seeded_disk_pairs());
}

inline ReproduceResult bergman_halfplane() {
    return estimate_vs_closed_form(
        "bergman_halfplane", make_space(KernelFamily::bergman_halfplane),
        make_space(SpaceFamily::pseudohyperbolic_halfplane, kSqrt2), 2e-2,
        seeded_halfplane_pairs());
}

inline ReproduceResult sqrt_length_profile() {
    MetricSpace space = make_space(SpaceFamily::sqrt_line);
    Path chord = straight_path(space, point1(0.0), point1(1.0));
    LengthResult lr = length_profile(chord, 6);
    std::ostringstream os;
    bool pass = true;
    for (std::size_t m : {4u, 16u, 64u}) {
        double expected = std::sqrt(static_cast<double>(m));
        double got = 0.0;
        for (const auto& [knots, s] : lr.trace)
            if (knots == m + 1) got = s;
        bool ok = std::abs(got - expected) <= 1e-12;
        pass = pass && ok;
        os << "  m=" << m << ": S " << format_g9(got) << " expected sqrt(m) "
           << format_g9(expected) << (ok ? "" : "  <-- FAIL") << "\n";
    }
    return {"sqrt_length_profile", pass, os.str()};
}

inline ReproduceResult divergence_case(const std::string& id, const MetricSpace& space,
                                       const Point& x, const Point& y) {
    EstimatorConfig cfg = line_config();
    cfg.relax_rounds = 20;
    IntrinsicEstimate est = estimate_intrinsic(space, x, y, cfg);
    bool pass = est.status == LengthStatus::diverged && est.upper_bound.is_infinite();
    std::ostringstream os;
    os << "  " << space.name() << " " << format_point(x) << " -> " << format_point(y) << ": "
       << length_status_name(est.status) << ", value " << est.upper_bound.str()
       << (pass ? "" : "  <-- FAIL") << "\n";
    return {id, pass, os.str()};
}

inline ReproduceResult sqrt_divergence() {
    return divergence_case("sqrt_divergence", make_space(SpaceFamily::sqrt_line), point1(0.0),
                           point1(1.0));
}
inline ReproduceResult discrete_divergence() {
    return divergence_case("discrete_divergence", make_space(SpaceFamily::discrete), point1(0.2),
                           point1(0.7));
}
inline ReproduceResult sobolev_divergence() {
    return divergence_case("sobolev_divergence", make_space(KernelFamily::sobolev_green),
                           point1(0.25), point1(0.75));
}
inline ReproduceResult minkernel_divergence() {
    return divergence_case("minkernel_divergence", make_space(KernelFamily::min_kernel),
                           point1(0.25), point1(0.75));
}

struct SimilarityExpectation {
    std::string label;
    SimilarityVerdict verdict;
    bool pass = false;
};

inline void describe(std::ostringstream& os, const SimilarityExpectation& e) {
    os << "  " << e.label << ": " << outcome_name(e.verdict.outcome) << " [liminf "
       << format_g9(e.verdict.liminf_estimate) << ", limsup "
       << format_g9(e.verdict.limsup_estimate) << "]" << (e.pass ? "" : "  <-- FAIL") << "\n";
}

inline ReproduceResult bilipschitz_similarity() {
    const double tol = 5e-3;
    auto prof = local_ratio_profile(make_space(SpaceFamily::euclidean_line),
                                    make_space(SpaceFamily::bilipschitz_example), point1(0.5),
                                    0.25, 10, 8, ProfileMode::point_vs_anchor);
    SimilarityVerdict v = similarity_verdict(prof, tol);
    bool pass = v.outcome == VerdictOutcome::fails &&
                std::abs(v.liminf_estimate - 2.0) <= tol && std::abs(v.limsup_estimate - 2.0) <= tol;
    std::ostringstream os;
    SimilarityExpectation e{"bilipschitz vs euclidean at a=0.5 (limit 1+2a=2)", v, pass};
    describe(os, e);
    return {"bilipschitz_similarity", pass, os.str()};
}

inline ReproduceResult truncated_similarity() {
    const double tol = 5e-3;
    auto prof = local_ratio_profile(make_space(SpaceFamily::euclidean_line),
                                    make_space(SpaceFamily::truncated_euclidean), point1(0.0),
                                    0.25, 10, 8, ProfileMode::point_vs_anchor);
    SimilarityVerdict v = similarity_verdict(prof, tol);
    bool pass = v.outcome == VerdictOutcome::holds;
    std::ostringstream os;
    SimilarityExpectation e{"truncated vs euclidean", v, pass};
    describe(os, e);
    return {"truncated_similarity", pass, os.str()};
}

inline ReproduceResult circular_similarity() {
    const double tol = 5e-3;
    auto prof = local_ratio_profile(make_space(SpaceFamily::circular_interval),
                                    make_space(SpaceFamily::euclidean_line), point1(1.0), 0.25,
                                    10, 8, ProfileMode::point_vs_anchor);
    SimilarityVerdict v = similarity_verdict(prof, tol);
    bool pass = v.outcome == VerdictOutcome::holds;
    std::ostringstream os;
    SimilarityExpectation e{"circular vs euclidean on (0, 2pi)", v, pass};
    describe(os, e);
    return {"circular_similarity", pass, os.str()};
}

inline ReproduceResult comb_distortion() {
    const double tol = 5e-3;
    auto prof = local_ratio_profile(make_space(SpaceFamily::comb_euclidean),
                                    make_space(SpaceFamily::comb_intrinsic), point2(0.0, 0.0),
                                    0.25, 8, 8, ProfileMode::point_vs_anchor);
    SimilarityVerdict v = similarity_verdict(prof, tol);
    bool pass = v.outcome == VerdictOutcome::fails &&
                std::abs(v.limsup_estimate - kSqrt2) <= tol &&
                std::abs(v.liminf_estimate - 1.0) <= tol;
    std::ostringstream os;
    SimilarityExpectation e{"comb rho vs d at (0,0) (limsup sqrt2, liminf 1)", v, pass};
    describe(os, e);
    double dil = local_dilatation(make_space(SpaceFamily::comb_euclidean),
                                  make_space(SpaceFamily::comb_intrinsic), point2(0.0, 0.0), 0.25,
                                  8, 16, 7);
    bool dil_ok = std::abs(dil - kSqrt2) <= tol;
    os << "  dilatation of id at (0,0): " << format_g9(dil) << " (expected sqrt2)"
       << (dil_ok ? "" : "  <-- FAIL") << "\n";
    pass = pass && dil_ok;
    return {"comb_distortion", pass, os.str()};
}

inline ReproduceResult hook_similarity() {
    const double tol = 5e-3;
    MetricSpace taxi = make_space(SpaceFamily::hook_taxi);
    MetricSpace euclid = make_space(SpaceFamily::hook_euclidean);
    Point origin = point2(0.0, 0.0);
    std::ostringstream os;

    auto local_prof =
        local_ratio_profile(taxi, euclid, origin, 0.25, 10, 8, ProfileMode::point_vs_anchor);
    SimilarityVerdict local = similarity_verdict(local_prof, tol);
    bool p1 = local.outcome == VerdictOutcome::holds;
    describe(os, {"hook local (d1 taxi vs d2 euclid)", local, p1});

    auto strong_prof =
        local_ratio_profile(taxi, euclid, origin, 0.25, 10, 8, ProfileMode::pair_in_ball);
    SimilarityVerdict strong = similarity_verdict(strong_prof, tol);
    bool p2 = strong.outcome == VerdictOutcome::fails &&
              std::abs(strong.liminf_estimate - kSqrt2 / 2.0) <= tol;
    describe(os, {"hook strong (liminf sqrt2/2)", strong, p2});

    auto infin_prof = infinitesimal_profile(taxi, euclid, origin, 0.25, 10, 8);
    SimilarityVerdict infin = similarity_verdict(infin_prof, tol);
    double expected_defect = (2.0 - kSqrt2) / 2.0;
    bool p3 = infin.outcome == VerdictOutcome::fails &&
              std::abs(infin.limsup_estimate - expected_defect) <= tol;
    describe(os, {"hook infinitesimal (limsup (2-sqrt2)/2)", infin, p3});

    double dil = local_dilatation(euclid, taxi, origin, 0.25, 10, 16, 7);
    bool p4 = std::abs(dil - kSqrt2) <= tol;
    os << "  dilatation of id (euclid -> taxi) at origin: " << format_g9(dil)
       << " (expected sqrt2)" << (p4 ? "" : "  <-- FAIL") << "\n";

    bool pass = p1 && p2 && p3 && p4;
    return {"hook_similarity", pass, os.str()};
}

inline ReproduceResult composition_constants() {
    std::ostringstream os;
    bool pass = true;
    auto check_q = [&](const std::string& name, double sigma, int m, double expected_q,
                       const std::string& label) {
        CompositionReport rep =
            composition_check(composition_function(name, sigma, m), 2.0, 200, 1e-6);
        bool ok = rep.verdict == VerdictOutcome::holds &&
                  std::abs(rep.Q_estimate - expected_q) <= 1e-4;
        if (composition_is_concave(name)) {
            double f1 = composition_function(name, sigma, m)(1.0);
            ok = ok && rep.lower_bound_C >= f1 - 1e-9;
        }
        if (name == "paley_wiener") ok = ok && rep.lower_bound_C >= 0.5 - 1e-6;
        pass = pass && ok;
        os << "  " << label << ": Q " << format_g9(rep.Q_estimate) << " expected "
           << format_g9(expected_q) << ", C " << format_g9(rep.lower_bound_C) << ", "
           << outcome_name(rep.verdict) << (ok ? "" : "  <-- FAIL") << "\n";
    };
    check_q("bergman", 0, 1, kSqrt2, "bergman t*sqrt(2-t^2)");
    for (double sigma : {0.5, 1.0, 2.0})
        check_q("gaussian", sigma, 1, kSqrt2 * sigma,
                "gaussian sigma=" + format_g9(sigma));
    for (int m : {1, 2, 3})
        check_q("polyfock", 0, m, std::sqrt(static_cast<double>(m)),
                "polyfock m=" + std::to_string(m));
    check_q("fock", 0, 1, 1.0, "fock");
    check_q("paley_wiener", 0, 1, 1.0, "paley_wiener (rescaled)");
    check_q("truncation", 0, 1, 1.0, "truncation min{1,t}");

    CompositionReport quad = composition_check(composition_function("quadratic", 0, 1), 2.0, 200, 1e-6);
    bool quad_ok = quad.verdict == VerdictOutcome::fails && std::abs(quad.Q_estimate) <= 1e-6;
    pass = pass && quad_ok;
    os << "  quadratic t^2: Q " << format_g9(quad.Q_estimate) << ", "
       << outcome_name(quad.verdict) << " (expected fails)" << (quad_ok ? "" : "  <-- FAIL")
       << "\n";
    return {"composition_constants", pass, os.str()};
}

inline ReproduceResult cover_lemma() {
    Rng rng(0xC0FE5EEDu);
    int violations = 0;
    long total_gaps = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int pieces = 1 + rng.uniform_int(0, 3);
        std::vector<double> breaks{0.0};
        for (int i = 1; i < pieces; ++i) breaks.push_back(rng.uniform(0.05, 0.95));
        std::sort(breaks.begin(), breaks.end());
        breaks.push_back(1.0);
        struct Piece {
            double lo, amp, w, phi;
        };
        std::vector<Piece> ps;
        for (int i = 0; i < pieces; ++i)
            ps.push_back({rng.uniform(0.02, 0.3), rng.uniform(0.0, 1.0), rng.uniform(0.5, 20.0),
                          rng.uniform(0.0, 6.28)});
        auto R = [breaks, ps](double t) {
            std::size_t i = 0;
            while (i + 1 < ps.size() && t >= breaks[i + 1]) ++i;
            const Piece& p = ps[i];
            return p.lo + p.amp * std::abs(std::sin(p.w * t + p.phi));
        };
        double theta = rng.uniform(0.25, 0.9);
        Partition part = cover_partition(R, 0.0, 1.0, theta, 200000);
        const auto& k = part.knots();
        for (std::size_t i = 1; i < k.size(); ++i) {
            ++total_gaps;
            if (!(k[i] - k[i - 1] < std::max(R(k[i - 1]), R(k[i])))) ++violations;
        }
    }
    std::ostringstream os;
    os << "  1000 random piecewise-smooth R: " << total_gaps << " gaps checked, " << violations
       << " violations\n";
    return {"cover_lemma", violations == 0, os.str()};
}

inline std::vector<Point> kernel_sample_points(const KernelSpec& k, Rng& rng, int count) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < count) {
        Point p;
        switch (k.family) {
            case KernelFamily::szego_disk:
            case KernelFamily::bergman_disk: {
                p = point2(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
                break;
            }
            case KernelFamily::bergman_halfplane:
                p = point2(rng.uniform(-2.0, 2.0), rng.uniform(0.3, 2.5));
                break;
            case KernelFamily::gaussian:
                p = k.dim == 2 ? point2(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
                               : point1(rng.uniform(-1.5, 1.5));
                break;
            case KernelFamily::fock:
            case KernelFamily::polyfock:
                p = point2(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
                break;
            case KernelFamily::paley_wiener:
                p = point1(rng.uniform(-2.0, 2.0));
                break;
            case KernelFamily::sobolev_green:
                p = point1(rng.uniform(0.08, 0.92));
                break;
            case KernelFamily::min_kernel:
                p = point1(rng.uniform(0.05, 1.0));
                break;
        }
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

inline ReproduceResult kernel_sanity() {
    std::ostringstream os;
    bool pass = true;
    const KernelFamily families[] = {
        KernelFamily::szego_disk,    KernelFamily::bergman_disk, KernelFamily::bergman_halfplane,
        KernelFamily::gaussian,      KernelFamily::fock,         KernelFamily::polyfock,
        KernelFamily::paley_wiener,  KernelFamily::sobolev_green, KernelFamily::min_kernel};

    for (KernelFamily fam : families) {
        KernelSpec spec;
        spec.family = fam;
        if (fam == KernelFamily::polyfock) spec.degree = 3;
        Rng rng(0x6B65726Eu + static_cast<unsigned>(fam));

        auto gram_pts = kernel_sample_points(spec, rng, 8);
        double min_eig = gram_min_eigenvalue(spec, gram_pts);
        bool gram_ok = min_eig >= -1e-10;

        double worst_triangle = 0.0;
        for (int t = 0; t < 10000; ++t) {
            auto tri = kernel_sample_points(spec, rng, 3);
            double dxz = kernel_distance(spec, tri[0], tri[2]);
            double dxy = kernel_distance(spec, tri[0], tri[1]);
            double dyz = kernel_distance(spec, tri[1], tri[2]);
            worst_triangle = std::max(worst_triangle, dxz - dxy - dyz);
        }
        bool tri_ok = worst_triangle <= 1e-10;
        pass = pass && gram_ok && tri_ok;
        os << "  " << kernel_family_name(fam) << ": min Gram eig " << format_g9(min_eig)
           << ", worst triangle violation " << format_g9(worst_triangle)
           << ((gram_ok && tri_ok) ? "" : "  <-- FAIL") << "\n";
    }

    // Szego distance coincides with the pseudohyperbolic distance.
    KernelSpec szego;
    szego.family = KernelFamily::szego_disk;
    MetricSpace disk = make_space(SpaceFamily::pseudohyperbolic_disk);
    Rng rng(0x535A4547u);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        auto pts = kernel_sample_points(szego, rng, 2);
        worst = std::max(worst,
                         std::abs(kernel_distance(szego, pts[0], pts[1]) -
                                  disk.distance(pts[0], pts[1])));
    }
    bool szego_ok = worst <= 1e-12;
    pass = pass && szego_ok;
    os << "  szego d_K vs rho_D on 1000 pairs: worst |diff| " << format_g9(worst)
       << (szego_ok ? "" : "  <-- FAIL") << "\n";
    return {"kernel_sanity", pass, os.str()};
}

inline ReproduceResult refinement_monotonicity() {
    Rng rng(0x4D4F4E4Fu);
    const std::vector<MetricSpace> spaces = [] {
        std::vector<MetricSpace> v;
        v.push_back(make_space(SpaceFamily::pseudolog_halfline));
        v.push_back(make_space(SpaceFamily::pseudolog_segment));
        v.push_back(make_space(SpaceFamily::pseudohyperbolic_disk));
        v.push_back(make_space(SpaceFamily::pseudohyperbolic_halfplane));
        v.push_back(make_space(SpaceFamily::circular_interval));
        v.push_back(make_space(SpaceFamily::sqrt_line));
        v.push_back(make_space(SpaceFamily::discrete));
        v.push_back(make_space(KernelFamily::gaussian));
        v.push_back(make_space(KernelFamily::fock));
        return v;
    }();

    auto sample_point = [&rng](const MetricSpace& s) {
        if (s.is_kernel_backed())
            return s.kernel_spec()->family == KernelFamily::gaussian
                       ? point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
                       : point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        switch (s.space_spec()->family) {
            case SpaceFamily::pseudolog_halfline: return point1(rng.uniform(0.5, 3.0));
            case SpaceFamily::pseudolog_segment: return point1(rng.uniform(1.0, 2.0));
            case SpaceFamily::pseudohyperbolic_disk: {
                while (true) {
                    Point p = point2(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
                    if (std::hypot(p.x, p.y) <= 0.7) return p;
                }
            }
            case SpaceFamily::pseudohyperbolic_halfplane:
                return point2(rng.uniform(-1.0, 1.0), rng.uniform(0.3, 2.0));
            case SpaceFamily::circular_interval: return point1(rng.uniform(0.5, 5.5));
            default: return point1(rng.uniform(-1.0, 1.0));
        }
    };

    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const MetricSpace& space = spaces[trial % spaces.size()];
        int n_ctrl = 2 + rng.uniform_int(0, 3);
        std::vector<Point> ctrl;
        int guard = 0;
        while (static_cast<int>(ctrl.size()) < n_ctrl && guard++ < 1000) {
            Point p = sample_point(space);
            bool close = false;
            for (const auto& q : ctrl)
                close = close || (std::abs(q.x - p.x) < 0.05 && std::abs(q.y - p.y) < 0.05);
            if (!close) ctrl.push_back(p);
        }
        if (static_cast<int>(ctrl.size()) < 2) continue;
        Path path(space, ctrl, Interpolation::ambient_linear);

        std::vector<double> knots{0.0, 1.0};
        for (int extra = rng.uniform_int(0, 6); extra > 0; --extra) {
            double t = rng.uniform_int(1, 63) / 64.0;
            if (std::find(knots.begin(), knots.end(), t) == knots.end()) knots.push_back(t);
        }
        std::sort(knots.begin(), knots.end());
        Partition base(knots);

        std::vector<double> refined = knots;
        bool inserted = false;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            if (rng.unit() < 0.6) {
                refined.push_back(0.5 * (knots[i] + knots[i + 1]));
                inserted = true;
            }
        }
        if (!inserted) refined.push_back(0.5 * (knots[0] + knots[1]));
        std::sort(refined.begin(), refined.end());
        Partition fine(refined);

        double s_base = polygonal_length(path, base);
        double s_fine = polygonal_length(path, fine);
        if (!(s_base <= s_fine)) ++violations;
    }
    std::ostringstream os;
    os << "  1000 seeded (path, partition, refinement) instances: " << violations
       << " monotonicity violations\n";
    return {"refinement_monotonicity", violations == 0, os.str()};
}

}  // namespace repro

inline const std::vector<std::string>& reproduce_ids() {
    static const std::vector<std::string> ids{
        "pseudolog_intrinsic",   "hyperbolic_halfplane", "hyperbolic_disk",
        "bergman_disk",          "bergman_halfplane",    "sqrt_length_profile",
        "sqrt_divergence",       "discrete_divergence",  "sobolev_divergence",
        "minkernel_divergence",  "bilipschitz_similarity", "truncated_similarity",
        "circular_similarity",   "comb_distortion",      "hook_similarity",
        "composition_constants", "cover_lemma",          "kernel_sanity",
        "refinement_monotonicity"};
    return ids;
}

inline ReproduceResult run_reproduce(const std::string& id) {
    using namespace repro;
    if (id == "pseudolog_intrinsic") return pseudolog_intrinsic();
    if (id == "hyperbolic_halfplane") return hyperbolic_halfplane();
    if (id == "hyperbolic_disk") return hyperbolic_disk();
    if (id == "bergman_disk") return bergman_disk();
    if (id == "bergman_halfplane") return bergman_halfplane();
    if (id == "sqrt_length_profile") return sqrt_length_profile();
    if (id == "sqrt_divergence") return sqrt_divergence();
    if (id == "discrete_divergence") return discrete_divergence();
    if (id == "sobolev_divergence") return sobolev_divergence();
    if (id == "minkernel_divergence") return minkernel_divergence();
    if (id == "bilipschitz_similarity") return bilipschitz_similarity();
    if (id == "truncated_similarity") return truncated_similarity();
    if (id == "circular_similarity") return circular_similarity();
    if (id == "comb_distortion") return comb_distortion();
    if (id == "hook_similarity") return hook_similarity();
    if (id == "composition_constants") return composition_constants();
    if (id == "cover_lemma") return cover_lemma();
    if (id == "kernel_sanity") return kernel_sanity();
    if (id == "refinement_monotonicity") return refinement_monotonicity();
    throw UnknownFamily("reproduce: unknown example id '" + id + "'");
}

}  // namespace metriclab
