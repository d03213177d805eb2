#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/spaces.hpp"

namespace metriclab {

enum class Interpolation {
    ambient_linear,  // piecewise-linear through the control points
    canonical,       // branch carriers: comb tooth-spine-tooth, hook via the origin
    callback,        // user-supplied parametrization
};

namespace detail {

// Shortest comb route: down the start column, along the spine, up the end
// column, parametrized proportionally to taxi length.
inline Point comb_segment_eval(const Point& a, const Point& b, double f) {
    if (comb_same_column(a, b)) return lerp(a, b, f);
    double l1 = a.y, l2 = std::abs(a.x - b.x), l3 = b.y;
    double total = l1 + l2 + l3;
    if (total <= 0.0) return a;
    double s = f * total;
    if (s <= l1) return point2(a.x, a.y - s);
    if (s <= l1 + l2) {
        double g = (s - l1) / l2;
        return point2(a.x + g * (b.x - a.x), 0.0);
    }
    double rem = std::min(s - l1 - l2, l3);
    return f >= 1.0 ? b : point2(b.x, rem);
}

// Hook route through the origin when the endpoints sit on different halfaxes.
inline Point hook_segment_eval(const Point& a, const Point& b, double f) {
    bool a_on_x = std::abs(a.y) <= kCarrierGuard;
    bool b_on_x = std::abs(b.y) <= kCarrierGuard;
    bool a_on_y = std::abs(a.x) <= kCarrierGuard;
    bool b_on_y = std::abs(b.x) <= kCarrierGuard;
    if ((a_on_x && b_on_x) || (a_on_y && b_on_y)) return lerp(a, b, f);
    double l1 = std::abs(a.x) + std::abs(a.y);
    double l2 = std::abs(b.x) + std::abs(b.y);
    double total = l1 + l2;
    if (total <= 0.0) return a;
    double s = f * total;
    if (s <= l1) {
        double g = 1.0 - s / l1;
        return point2(a.x * g, a.y * g);
    }
    if (f >= 1.0) return b;
    double g = (s - l1) / l2;
    return point2(b.x * g, b.y * g);
}

}  // namespace detail

// A parametrized curve on [0, 1] through ordered control points, with
// space-aware interpolation. Evaluation at 0 and 1 returns the endpoints.
class Path {
public:
    Path(MetricSpace space, std::vector<Point> control, Interpolation mode)
        : space_(std::move(space)), control_(std::move(control)), mode_(mode) {
        if (control_.size() < 2) throw std::invalid_argument("path needs >= 2 control points");
        if (mode_ == Interpolation::callback)
            throw std::invalid_argument("callback paths need the callback constructor");
        for (const Point& p : control_) space_.require_point(p);
        if (mode_ == Interpolation::canonical && !space_.has_branch_carrier())
            throw std::invalid_argument("canonical interpolation is for branch carriers");
    }

    Path(MetricSpace space, std::function<Point(double)> fn)
        : space_(std::move(space)),
          mode_(Interpolation::callback),
          callback_(std::move(fn)) {
        if (!callback_) throw std::invalid_argument("null path callback");
        control_ = {callback_(0.0), callback_(1.0)};
        for (const Point& p : control_) space_.require_point(p);
    }

    const MetricSpace& space() const { return space_; }
    const std::vector<Point>& control_points() const { return control_; }
    Interpolation interpolation() const { return mode_; }
    const Point& start() const { return control_.front(); }
    const Point& end() const { return control_.back(); }

    Point eval(double t) const {
        if (t <= 0.0) return control_.front();
        if (t >= 1.0) return control_.back();
        if (mode_ == Interpolation::callback) return callback_(t);
        const std::size_t m = control_.size() - 1;
        double s = t * static_cast<double>(m);
        std::size_t i = std::min(static_cast<std::size_t>(s), m - 1);
        double f = s - static_cast<double>(i);
        const Point& a = control_[i];
        const Point& b = control_[i + 1];
        if (mode_ == Interpolation::ambient_linear) return detail::lerp(a, b, f);
        if (space_.space_spec() &&
            (space_.space_spec()->family == SpaceFamily::hook_taxi ||
             space_.space_spec()->family == SpaceFamily::hook_euclidean))
            return detail::hook_segment_eval(a, b, f);
        return detail::comb_segment_eval(a, b, f);
    }

    Path with_control(std::vector<Point> control) const {
        return Path(space_, std::move(control), mode_);
    }

private:
    MetricSpace space_;
    std::vector<Point> control_;
    Interpolation mode_;
    std::function<Point(double)> callback_;
};

// The canonical path between two carrier points: the chord where the carrier
// is convex, the family branch route on the comb and the hook.
inline Path straight_path(const MetricSpace& space, const Point& x, const Point& y) {
    space.require_point(x);
    space.require_point(y);
    if (space.has_branch_carrier())
        return Path(space, {x, y}, Interpolation::canonical);
    if (space.chord_stays_in_carrier())
        return Path(space, {x, y}, Interpolation::ambient_linear);
    throw NoCanonicalPath(space.name() + ": no canonical path between " + format_point(x) +
                          " and " + format_point(y));
}

// Control points resampled at uniform parameters along the existing path.
inline Path resample_path(const Path& path, int segments) {
    if (segments < 1) throw std::invalid_argument("resample_path: segments must be >= 1");
    std::vector<Point> pts;
    pts.reserve(segments + 1);
    for (int i = 0; i <= segments; ++i)
        pts.push_back(path.eval(static_cast<double>(i) / segments));
    pts.front() = path.start();
    pts.back() = path.end();
    if (path.interpolation() == Interpolation::callback)
        return Path(path.space(), std::move(pts), Interpolation::ambient_linear);
    return path.with_control(std::move(pts));
}

}  // namespace metriclab
