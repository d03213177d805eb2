#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/path_length.hpp"

namespace metriclab {

struct EstimatorConfig {
    int segments = 64;               // final polyline resolution, <= 4096
    int relax_rounds = 400;          // pattern-search passes per resolution level
    double perturbation_scale = 0.5; // initial step as a fraction of the path extent
    double length_tol = 1e-8;
    std::uint64_t seed = 1;
    int max_depth = 20;
    double divergence_ratio = 1.25;
};

inline void validate(const EstimatorConfig& c) {
    if (c.segments < 1 || c.segments > 4096) throw BadParams("estimator: segments in [1, 4096]");
    if (c.relax_rounds < 0) throw BadParams("estimator: relax_rounds must be >= 0");
    if (!(c.perturbation_scale > 0.0)) throw BadParams("estimator: perturbation_scale > 0");
    if (!(c.length_tol > 0.0)) throw BadParams("estimator: length_tol > 0");
}

struct IntrinsicEstimate {
    ExtendedLength upper_bound;
    Path path;
    long iterations = 0;  // accepted relaxation moves
    LengthStatus status = LengthStatus::inconclusive;
};

namespace detail {

// Discrete path energy, sum of squared segment distances. Its minimizer is
// the equidistributed geodesic polygon: by Cauchy-Schwarz the energy of any
// m-gon is at least (polygon length)^2 / m, with equality only at equal
// spacing, so shortening and equidistribution are rewarded together and
// collapsing control points onto each other never pays.
inline double segment_energy(const MetricSpace& space, const Point& a, const Point& b) {
    double d = space.distance(a, b);
    return d * d;
}

inline double path_extent(const std::vector<Point>& pts) {
    double xlo = pts[0].x, xhi = pts[0].x, ylo = pts[0].y, yhi = pts[0].y;
    for (const Point& p : pts) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    return std::max(xhi - xlo, yhi - ylo);
}

// Corner-aware starting partition for canonical branch paths, so refinement
// sees only axis-parallel pieces and the sum is exact immediately.
inline Partition canonical_corner_partition(const Path& path) {
    const auto& c = path.control_points();
    const std::size_t m = c.size() - 1;
    std::vector<double> knots{0.0};
    for (std::size_t i = 0; i < m; ++i) {
        double t0 = static_cast<double>(i) / static_cast<double>(m);
        double span = 1.0 / static_cast<double>(m);
        const Point& a = c[i];
        const Point& b = c[i + 1];
        double l1 = 0.0, l2 = 0.0, total = 0.0;
        bool corner = false;
        if (path.space().space_spec() &&
            (path.space().space_spec()->family == SpaceFamily::hook_taxi ||
             path.space().space_spec()->family == SpaceFamily::hook_euclidean)) {
            bool same_axis = (std::abs(a.y) <= kCarrierGuard && std::abs(b.y) <= kCarrierGuard) ||
                             (std::abs(a.x) <= kCarrierGuard && std::abs(b.x) <= kCarrierGuard);
            if (!same_axis) {
                l1 = std::abs(a.x) + std::abs(a.y);
                total = l1 + std::abs(b.x) + std::abs(b.y);
                corner = total > 0.0;
            }
        } else if (!comb_same_column(a, b)) {
            l1 = a.y;
            l2 = std::abs(a.x - b.x);
            total = l1 + l2 + b.y;
            corner = total > 0.0;
        }
        if (corner) {
            for (double s : {l1, l1 + l2}) {
                double t = t0 + span * (s / total);
                if (t > knots.back() + 1e-15 && t < t0 + span - 1e-15) knots.push_back(t);
            }
        }
        double t1 = (i + 1 == m) ? 1.0 : t0 + span;
        if (t1 > knots.back() + 1e-15) knots.push_back(t1);
    }
    if (knots.back() != 1.0) knots.push_back(1.0);
    return Partition(std::move(knots));
}

}  // namespace detail

// Coordinate-wise pattern search over the interior control points, accepting
// only moves that reduce the discrete path energy. Endpoints stay fixed;
// moves leaving the carrier are rejected. The step halves whenever a full
// pass makes no progress. Deterministic for a given path and config.
inline Path relax_path(const Path& path, const EstimatorConfig& config, long* accepted = nullptr) {
    validate(config);
    const MetricSpace& space = path.space();
    if (!space.supports_relaxation() || path.interpolation() != Interpolation::ambient_linear)
        return path;  // constrained carriers keep their canonical paths
    std::vector<Point> pts = path.control_points();
    if (pts.size() < 3) return path;

    const double extent = std::max(detail::path_extent(pts), 1e-9);
    auto two_segments = [&](const Point& left, const Point& mid, const Point& right) {
        return detail::segment_energy(space, left, mid) +
               detail::segment_energy(space, mid, right);
    };

    double h = config.perturbation_scale * extent;
    const double h_min = 1e-7 * extent;
    const int dims = space.dimensionality();
    long moves = 0;

    for (int pass = 0; pass < config.relax_rounds && h >= h_min; ++pass) {
        bool improved = false;
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            for (int axis = 0; axis < dims; ++axis) {
                for (double sign : {1.0, -1.0}) {
                    Point cand = pts[i];
                    (axis == 0 ? cand.x : cand.y) += sign * h;
                    if (!space.contains(cand)) continue;
                    double before = two_segments(pts[i - 1], pts[i], pts[i + 1]);
                    double after = two_segments(pts[i - 1], cand, pts[i + 1]);
                    if (after < before - 1e-15 * (1.0 + before)) {
                        pts[i] = cand;
                        improved = true;
                        ++moves;
                    }
                }
            }
        }
        if (!improved) h *= 0.5;
    }
    if (accepted) *accepted += moves;
    return path.with_control(std::move(pts));
}

// Upper-bound estimate of the intrinsic distance: canonical start path,
// pattern-search relaxation with progressive segment doubling, then refined
// length of the result.
inline IntrinsicEstimate estimate_intrinsic(const MetricSpace& space, const Point& x,
                                            const Point& y, const EstimatorConfig& config = {}) {
    validate(config);
    space.require_point(x);
    space.require_point(y);

    Path path = straight_path(space, x, y);
    if (x == y)
        return IntrinsicEstimate{ExtendedLength::finite(0.0), path, 0, LengthStatus::converged};

    long iterations = 0;
    if (space.supports_relaxation() && config.relax_rounds > 0 && config.segments >= 2) {
        int n = std::min(4, config.segments);
        path = resample_path(path, n);
        while (true) {
            EstimatorConfig level = config;
            level.perturbation_scale =
                config.perturbation_scale * std::sqrt(4.0 / static_cast<double>(n));
            path = relax_path(path, level, &iterations);
            if (n >= config.segments) break;
            n = std::min(2 * n, config.segments);
            path = resample_path(path, n);
        }
    }

    LengthOptions lo;
    lo.tol = config.length_tol;
    lo.max_depth = config.max_depth;
    lo.divergence_ratio = config.divergence_ratio;
    // Seed the refinement with the control breakpoints: every segment then
    // refines from depth 0, so a locally flat reparametrization cannot stall
    // the convergence test on a dyadic plateau.
    std::optional<Partition> start;
    if (path.interpolation() == Interpolation::canonical)
        start = detail::canonical_corner_partition(path);
    else if (path.control_points().size() > 2)
        start = Partition::uniform(0.0, 1.0, static_cast<int>(path.control_points().size()) - 1);
    LengthResult lr = path_length(path, lo, start);
    return IntrinsicEstimate{lr.value, path, iterations, lr.status};
}

struct PairComparison {
    Point x, y;
    double estimate1 = 0.0;       // +inf encoded as infinity()
    double reference2 = 0.0;
    bool reference_is_closed_form = false;
    double rel_gap = 0.0;
    LengthStatus status1 = LengthStatus::inconclusive;
    bool pass = false;
};

struct ComparisonReport {
    std::vector<PairComparison> rows;
    double max_rel_gap = 0.0;
    bool pass = true;
};

namespace detail {

inline unsigned thread_budget(std::size_t jobs) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("METRICLAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return std::min<unsigned>(hw, static_cast<unsigned>(std::max<std::size_t>(jobs, 1)));
}

}  // namespace detail

// Estimates d1* on each pair and compares against d2* (closed form when
// available, otherwise estimated). Evidence for, never proof of, equality.
inline ComparisonReport verify_theorem_instance(const MetricSpace& space1,
                                                const MetricSpace& space2,
                                                std::span<const std::pair<Point, Point>> pairs,
                                                const EstimatorConfig& config, double tol) {
    if (space1.dimensionality() != space2.dimensionality())
        throw BadParams("verify_theorem_instance: spaces must share a carrier dimension");
    ComparisonReport report;
    report.rows.resize(pairs.size());

    auto worker = [&](std::size_t i) {
        const auto& [px, py] = pairs[i];
        PairComparison row;
        row.x = px;
        row.y = py;
        IntrinsicEstimate e1 = estimate_intrinsic(space1, px, py, config);
        row.estimate1 = e1.upper_bound.value();
        row.status1 = e1.status;
        row.reference_is_closed_form = space2.has_closed_form_intrinsic();
        ExtendedLength ref = row.reference_is_closed_form
                                 ? space2.closed_form_intrinsic(px, py)
                                 : estimate_intrinsic(space2, px, py, config).upper_bound;
        row.reference2 = ref.value();
        if (std::isinf(row.estimate1) && std::isinf(row.reference2))
            row.rel_gap = 0.0;
        else if (std::isinf(row.estimate1) || std::isinf(row.reference2))
            row.rel_gap = std::numeric_limits<double>::infinity();
        else if (row.reference2 == 0.0)
            row.rel_gap = std::abs(row.estimate1);
        else
            row.rel_gap = std::abs(row.estimate1 - row.reference2) / std::abs(row.reference2);
        row.pass = row.rel_gap <= tol;
        report.rows[i] = row;
    };

    unsigned threads = detail::thread_budget(pairs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) worker(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < pairs.size(); i = next++) worker(i);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& row : report.rows) {
        report.max_rel_gap = std::max(report.max_rel_gap, row.rel_gap);
        report.pass = report.pass && row.pass;
    }
    return report;
}

}  // namespace metriclab
