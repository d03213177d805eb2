#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/partition.hpp"
#include "metriclab/path.hpp"

namespace metriclab {

enum class LengthStatus { converged, diverged, inconclusive };

inline const char* length_status_name(LengthStatus s) {
    switch (s) {
        case LengthStatus::converged: return "converged";
        case LengthStatus::diverged: return "diverged";
        case LengthStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct LengthResult {
    LengthStatus status = LengthStatus::inconclusive;
    ExtendedLength value;
    std::vector<std::pair<std::size_t, double>> trace;  // (knot count, S)
};

// Polygonal length: the sum of space distances over consecutive knots.
inline double polygonal_length(const Path& path, const Partition& partition) {
    if (partition.lo() != 0.0 || partition.hi() != 1.0)
        throw std::invalid_argument("polygonal_length: partition must span [0, 1]");
    const auto& t = partition.knots();
    double sum = 0.0;
    Point prev = path.eval(t[0]);
    for (std::size_t k = 1; k < t.size(); ++k) {
        Point cur = path.eval(t[k]);
        sum += path.space().distance(prev, cur);
        prev = cur;
    }
    return sum;
}

struct LengthOptions {
    double tol = 1e-8;
    int max_depth = 20;             // hard cap 30
    double divergence_ratio = 1.25;
    double divergence_cap = 1e6;
    int divergence_window = 3;      // consecutive growth steps needed
    int min_divergence_depth = 4;   // early steps of slow converging sums can still grow fast
};

namespace detail {

inline double knots_polygonal_sum(const Path& path, const std::vector<double>& t) {
    double sum = 0.0;
    Point prev = path.eval(t[0]);
    for (std::size_t k = 1; k < t.size(); ++k) {
        Point cur = path.eval(t[k]);
        sum += path.space().distance(prev, cur);
        prev = cur;
    }
    return sum;
}

inline std::vector<double> midpoint_refine(const std::vector<double>& t) {
    std::vector<double> out;
    out.reserve(2 * t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        out.push_back(t[i]);
        out.push_back(0.5 * (t[i] + t[i + 1]));
    }
    out.push_back(t.back());
    return out;
}

inline void classify_trace(LengthResult& res, const LengthOptions& opt) {
    const auto& tr = res.trace;
    const double last = tr.back().second;
    if (last > opt.divergence_cap) {
        res.status = LengthStatus::diverged;
        res.value = ExtendedLength::infinite();
        return;
    }
    int streak = 0;
    for (std::size_t i = tr.size(); i-- > 1;) {
        double prev = tr[i - 1].second;
        if (prev > 0.0 && tr[i].second >= opt.divergence_ratio * prev)
            ++streak;
        else
            break;
    }
    if (static_cast<int>(tr.size()) > opt.min_divergence_depth && streak >= opt.divergence_window) {
        res.status = LengthStatus::diverged;
        res.value = ExtendedLength::infinite();
        return;
    }
    if (tr.size() >= 2 && std::abs(last - tr[tr.size() - 2].second) < opt.tol) {
        res.status = LengthStatus::converged;
        res.value = ExtendedLength::finite(last);
        return;
    }
    res.status = LengthStatus::inconclusive;
    res.value = ExtendedLength::finite(last);
}

inline LengthResult length_by_refinement(const Path& path, const LengthOptions& opt,
                                         std::vector<double> knots, bool full_depth) {
    if (!(opt.tol > 0.0)) throw std::invalid_argument("path_length: tol must be positive");
    if (opt.max_depth < 1 || opt.max_depth > 30)
        throw std::invalid_argument("path_length: max_depth must be in [1, 30]");
    if (!(opt.divergence_ratio > 1.0))
        throw std::invalid_argument("path_length: divergence_ratio must exceed 1");

    LengthResult res;
    double s_prev = knots_polygonal_sum(path, knots);
    res.trace.emplace_back(knots.size(), s_prev);
    int growth_streak = 0;

    for (int depth = 1; depth <= opt.max_depth; ++depth) {
        knots = midpoint_refine(knots);
        double s = knots_polygonal_sum(path, knots);
        res.trace.emplace_back(knots.size(), s);

        if (!full_depth) {
            if (s > opt.divergence_cap) {
                res.status = LengthStatus::diverged;
                res.value = ExtendedLength::infinite();
                return res;
            }
            // Refinement can only increase S; a material decrease means the
            // summands hit the floating-point noise floor of the distance
            // formula, so the previous sum is the best reliable value.
            double fp_allowance = 1e-13 + 4e-16 * static_cast<double>(knots.size()) *
                                              (1.0 + std::abs(s_prev));
            if (s < s_prev - fp_allowance) {
                res.trace.pop_back();
                res.status = LengthStatus::inconclusive;
                res.value = ExtendedLength::finite(s_prev);
                return res;
            }
            if (s_prev > 0.0 && s >= opt.divergence_ratio * s_prev)
                ++growth_streak;
            else
                growth_streak = 0;
            if (depth >= opt.min_divergence_depth && growth_streak >= opt.divergence_window) {
                res.status = LengthStatus::diverged;
                res.value = ExtendedLength::infinite();
                return res;
            }
            if (std::abs(s - s_prev) < opt.tol) {
                res.status = LengthStatus::converged;
                res.value = ExtendedLength::finite(s);
                return res;
            }
        }
        s_prev = s;
    }
    classify_trace(res, opt);
    return res;
}

}  // namespace detail

// Length by iterated dyadic refinement. Converges when one refinement step
// moves S by less than tol; diverges on a sustained geometric growth streak
// or when S passes the cap; inconclusive otherwise.
inline LengthResult path_length(const Path& path, const LengthOptions& opt = {},
                                const std::optional<Partition>& initial = std::nullopt) {
    std::vector<double> knots = initial ? initial->knots() : std::vector<double>{0.0, 1.0};
    if (knots.front() != 0.0 || knots.back() != 1.0)
        throw std::invalid_argument("path_length: initial partition must span [0, 1]");
    return detail::length_by_refinement(path, opt, std::move(knots), false);
}

inline LengthResult path_length(const Path& path, double tol, int max_depth,
                                double divergence_ratio) {
    LengthOptions opt;
    opt.tol = tol;
    opt.max_depth = max_depth;
    opt.divergence_ratio = divergence_ratio;
    return path_length(path, opt);
}

// Full refinement trace to max_depth with no early stop, classified afterwards.
inline LengthResult length_profile(const Path& path, int max_depth, LengthOptions opt = {}) {
    opt.max_depth = max_depth;
    return detail::length_by_refinement(path, opt, {0.0, 1.0}, true);
}

}  // namespace metriclab
