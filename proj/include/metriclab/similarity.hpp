#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/random.hpp"
#include "metriclab/spaces.hpp"

namespace metriclab {

enum class SimilarityRelation { locally_similar, strongly_similar, infinitesimally_similar };
enum class ProfileMode { point_vs_anchor, pair_in_ball };
enum class VerdictOutcome { holds, fails, inconclusive };

inline const char* relation_name(SimilarityRelation r) {
    switch (r) {
        case SimilarityRelation::locally_similar: return "locally_similar";
        case SimilarityRelation::strongly_similar: return "strongly_similar";
        case SimilarityRelation::infinitesimally_similar: return "infinitesimally_similar";
    }
    return "?";
}

inline const char* outcome_name(VerdictOutcome o) {
    switch (o) {
        case VerdictOutcome::holds: return "holds";
        case VerdictOutcome::fails: return "fails";
        case VerdictOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

struct RatioRecord {
    double radius = 0.0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    int sample_count = 0;
    std::pair<Point, Point> witness_min{};  // (x, y); y is the anchor in point mode
    std::pair<Point, Point> witness_max{};
};

struct RatioProfile {
    Point anchor;
    ProfileMode mode = ProfileMode::point_vs_anchor;
    SimilarityRelation relation = SimilarityRelation::locally_similar;
    double target = 1.0;  // ratios approach 1, defects approach 0
    std::vector<RatioRecord> records;
};

struct SimilarityVerdict {
    SimilarityRelation relation = SimilarityRelation::locally_similar;
    VerdictOutcome outcome = VerdictOutcome::inconclusive;
    double liminf_estimate = 0.0;
    double limsup_estimate = 0.0;
    std::optional<std::pair<Point, Point>> witness;
};

namespace detail {

struct SamplePoint {
    Point p;
    int branch = 0;
    bool through_anchor = true;  // the branch passes through the anchor point
};

// One bisection step solves d1(p(t), a) = r along a parametrized ray/segment.
template <typename Curve>
std::optional<double> bisect_radius(const Curve& at, const MetricSpace& s1, const Point& a,
                                    double r, double t_lo, double t_hi) {
    double f_lo = s1.distance(at(t_lo), a) - r;
    double f_hi = s1.distance(at(t_hi), a) - r;
    if (f_lo == 0.0) return t_lo;
    if (f_hi == 0.0) return t_hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;
    for (int it = 0; it < 90; ++it) {
        double mid = 0.5 * (t_lo + t_hi);
        double f = s1.distance(at(mid), a) - r;
        if (f == 0.0) return mid;
        if ((f < 0.0) == (f_lo < 0.0)) {
            t_lo = mid;
            f_lo = f;
        } else {
            t_hi = mid;
        }
    }
    return 0.5 * (t_lo + t_hi);
}

// Points at d1-distance ~r from the anchor along a carrier segment.
inline void segment_sphere_points(const MetricSpace& s1, const MetricSpace& s2, const Point& a,
                                  double r, const Point& seg_a, const Point& seg_b, int branch,
                                  bool through_anchor, std::vector<SamplePoint>& out) {
    auto at = [&](double s) { return lerp(seg_a, seg_b, s); };
    const int grid = 48;
    double prev_s = 0.0;
    double prev_f = s1.distance(at(0.0), a) - r;
    for (int i = 1; i <= grid; ++i) {
        double s = static_cast<double>(i) / grid;
        double f = s1.distance(at(s), a) - r;
        if ((f < 0.0) != (prev_f < 0.0) || f == 0.0 || prev_f == 0.0) {
            if (auto hit = bisect_radius(at, s1, a, r, prev_s, s)) {
                Point p = at(*hit);
                double d = s1.distance(p, a);
                if (std::abs(d - r) <= 0.01 * r && d > 0.0 && s2.contains(p) && !(p == a)) {
                    bool dup = false;
                    for (const auto& q : out)
                        if (std::abs(q.p.x - p.x) <= 1e-13 && std::abs(q.p.y - p.y) <= 1e-13)
                            dup = true;
                    if (!dup) out.push_back({p, branch, through_anchor});
                }
            }
        }
        prev_s = s;
        prev_f = f;
    }
}

inline void ray_sphere_point(const MetricSpace& s1, const MetricSpace& s2, const Point& a,
                             double r, double ex, double ey, int branch,
                             std::vector<SamplePoint>& out) {
    auto at = [&](double t) {
        Point p = a;
        p.x += t * ex;
        p.y += t * ey;
        return p;
    };
    double t = 1e-9 * (1.0 + std::abs(a.x) + std::abs(a.y));
    if (!s1.contains(at(t))) return;
    double t_in = t;
    bool bracketed = false;
    for (int it = 0; it < 200; ++it) {
        double t_next = t * 2.0;
        if (!s1.contains(at(t_next))) {
            // cap at the carrier boundary, then check the radius is reachable
            double lo = t, hi = t_next;
            for (int b = 0; b < 80; ++b) {
                double mid = 0.5 * (lo + hi);
                (s1.contains(at(mid)) ? lo : hi) = mid;
            }
            if (s1.distance(at(lo), a) < r) return;  // ball pokes out of the carrier here
            t = lo;
            bracketed = true;
            break;
        }
        t = t_next;
        if (s1.distance(at(t), a) >= r) {
            bracketed = true;
            break;
        }
    }
    if (!bracketed) return;
    if (auto hit = bisect_radius(at, s1, a, r, t_in, t)) {
        Point p = at(*hit);
        double d = s1.distance(p, a);
        if (std::abs(d - r) <= 0.01 * r && d > 0.0 && s2.contains(p) && !(p == a))
            out.push_back({p, branch, true});
    }
}

// Carrier-aware enumeration of the d1-sphere of radius r around the anchor.
// Open carriers use equally spaced directions; 1D carriers use the two sides;
// comb and hook carriers walk the finitely many branch segments that can meet
// the ball.
inline std::vector<SamplePoint> sample_sphere(const MetricSpace& s1, const MetricSpace& s2,
                                              const Point& a, double r, int directions) {
    std::vector<SamplePoint> out;
    if (s1.has_branch_carrier()) {
        const SpaceSpec& spec = *s1.space_spec();
        if (spec.family == SpaceFamily::hook_taxi || spec.family == SpaceFamily::hook_euclidean) {
            double reach = std::abs(a.x) + std::abs(a.y) + 2.0 * r + 1.0;
            bool a_on_x = std::abs(a.y) <= kCarrierGuard;
            bool a_on_y = std::abs(a.x) <= kCarrierGuard;
            segment_sphere_points(s1, s2, a, r, point2(0, 0), point2(reach, 0), 0, a_on_x, out);
            segment_sphere_points(s1, s2, a, r, point2(0, 0), point2(0, reach), 1, a_on_y, out);
            return out;
        }
        // comb: spine plus every tooth whose abscissa is within cross-reach
        bool a_on_spine = std::abs(a.y) <= kCarrierGuard;
        segment_sphere_points(s1, s2, a, r, point2(0, 0), point2(1, 0), 0, a_on_spine, out);
        double lo = a.x - r - kCarrierGuard;
        double hi = a.x + r + kCarrierGuard;
        int q_lo = (hi > 0.0) ? std::max(1, static_cast<int>(std::floor(1.0 / hi))) : 1;
        int q_hi = (lo > 1.0 / (spec.tooth_count + 1.0))
                       ? std::min(spec.tooth_count, static_cast<int>(std::ceil(1.0 / lo)) + 1)
                       : spec.tooth_count;
        for (int q = q_lo; q <= q_hi; ++q) {
            double tx = 1.0 / q;
            if (tx < lo || tx > hi) continue;
            bool through = std::abs(tx - a.x) <= kCarrierGuard && !a_on_spine;
            segment_sphere_points(s1, s2, a, r, point2(tx, 0), point2(tx, 1), q, through, out);
        }
        return out;
    }
    if (s1.dimensionality() == 1) {
        ray_sphere_point(s1, s2, a, r, 1.0, 0.0, 0, out);
        ray_sphere_point(s1, s2, a, r, -1.0, 0.0, 1, out);
        return out;
    }
    for (int i = 0; i < directions; ++i) {
        double th = 2.0 * std::numbers::pi * static_cast<double>(i) / directions;
        ray_sphere_point(s1, s2, a, r, std::cos(th), std::sin(th), i, out);
    }
    return out;
}

inline void check_shared_carrier(const MetricSpace& s1, const MetricSpace& s2, const Point& a) {
    if (s1.dimensionality() != s2.dimensionality())
        throw BadParams("similarity: spaces must share a carrier dimension");
    s1.require_point(a);
    s2.require_point(a);
}

}  // namespace detail

// Extreme ratios d2/d1 (point mode: x against the anchor; pair mode: distinct
// pairs inside the d1-ball) on the radius ladder r0, r0/2, r0/4, ...
// Radii with no carrier samples produce empty records rather than errors.
inline RatioProfile local_ratio_profile(const MetricSpace& space1, const MetricSpace& space2,
                                        const Point& a, double r0, int levels, int directions,
                                        ProfileMode mode) {
    if (!(r0 > 0.0)) throw BadParams("local_ratio_profile: r0 must be positive");
    if (levels < 1 || levels > 40) throw BadParams("local_ratio_profile: levels in [1, 40]");
    if (directions < 2) throw BadParams("local_ratio_profile: directions must be >= 2");
    detail::check_shared_carrier(space1, space2, a);

    RatioProfile prof;
    prof.anchor = a;
    prof.mode = mode;
    prof.relation = (mode == ProfileMode::point_vs_anchor) ? SimilarityRelation::locally_similar
                                                           : SimilarityRelation::strongly_similar;
    prof.target = 1.0;

    for (int j = 0; j < levels; ++j) {
        double r = r0 * std::ldexp(1.0, -j);
        RatioRecord rec;
        rec.radius = r;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();

        auto consider = [&](const Point& u, const Point& v) {
            double d1 = space1.distance(u, v);
            if (!(d1 > 0.0)) return;
            double ratio = space2.distance(u, v) / d1;
            if (ratio < lo) {
                lo = ratio;
                rec.witness_min = {u, v};
            }
            if (ratio > hi) {
                hi = ratio;
                rec.witness_max = {u, v};
            }
            ++rec.sample_count;
        };

        if (mode == ProfileMode::point_vs_anchor) {
            for (const auto& s : detail::sample_sphere(space1, space2, a, r, directions))
                consider(s.p, a);
        } else {
            std::vector<Point> pts{a};
            auto add_shell = [&](double rr) {
                auto shell = detail::sample_sphere(space1, space2, a, rr, directions);
                std::size_t stride = std::max<std::size_t>(1, shell.size() / 48);
                for (std::size_t i = 0; i < shell.size(); i += stride) pts.push_back(shell[i].p);
            };
            add_shell(r);
            add_shell(0.5 * r);
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j2 = i + 1; j2 < pts.size(); ++j2)
                    if (!(pts[i] == pts[j2])) consider(pts[i], pts[j2]);
        }

        if (rec.sample_count > 0) {
            rec.min_ratio = lo;
            rec.max_ratio = hi;
        }
        prof.records.push_back(rec);
    }
    return prof;
}

// Extremes of the infinitesimal defect |d2(x,y)-d1(x,y)| / (d1(x,a)+d1(y,a))
// over distinct pairs in the shrinking d1-ball.
inline RatioProfile infinitesimal_profile(const MetricSpace& space1, const MetricSpace& space2,
                                          const Point& a, double r0, int levels, int directions) {
    if (!(r0 > 0.0)) throw BadParams("infinitesimal_profile: r0 must be positive");
    if (levels < 1 || levels > 40) throw BadParams("infinitesimal_profile: levels in [1, 40]");
    detail::check_shared_carrier(space1, space2, a);

    RatioProfile prof;
    prof.anchor = a;
    prof.mode = ProfileMode::pair_in_ball;
    prof.relation = SimilarityRelation::infinitesimally_similar;
    prof.target = 0.0;

    for (int j = 0; j < levels; ++j) {
        double r = r0 * std::ldexp(1.0, -j);
        RatioRecord rec;
        rec.radius = r;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();

        std::vector<Point> pts{a};
        auto add_shell = [&](double rr) {
            auto shell = detail::sample_sphere(space1, space2, a, rr, directions);
            std::size_t stride = std::max<std::size_t>(1, shell.size() / 48);
            for (std::size_t i = 0; i < shell.size(); i += stride) pts.push_back(shell[i].p);
        };
        add_shell(r);
        add_shell(0.5 * r);

        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j2 = i + 1; j2 < pts.size(); ++j2) {
                const Point& u = pts[i];
                const Point& v = pts[j2];
                if (u == v) continue;
                double den = space1.distance(u, a) + space1.distance(v, a);
                if (!(den > 0.0)) continue;
                double defect = std::abs(space2.distance(u, v) - space1.distance(u, v)) / den;
                if (defect < lo) {
                    lo = defect;
                    rec.witness_min = {u, v};
                }
                if (defect > hi) {
                    hi = defect;
                    rec.witness_max = {u, v};
                }
                ++rec.sample_count;
            }
        }
        if (rec.sample_count > 0) {
            rec.min_ratio = lo;
            rec.max_ratio = hi;
        }
        prof.records.push_back(rec);
    }
    return prof;
}

// Verdict from the tail of a profile. A finite ladder can never prove a
// limit, so holds/fails additionally require the last three nonempty records
// to agree within tol; anything unstable stays inconclusive.
inline SimilarityVerdict similarity_verdict(const RatioProfile& profile, double tol) {
    if (!(tol > 0.0)) throw BadParams("similarity_verdict: tol must be positive");
    std::vector<const RatioRecord*> filled;
    for (const auto& r : profile.records)
        if (r.sample_count > 0) filled.push_back(&r);
    if (filled.size() < 4)
        throw InsufficientData("similarity_verdict: need at least 4 nonempty records");

    SimilarityVerdict v;
    v.relation = profile.relation;
    const auto* last = filled.back();
    v.liminf_estimate = last->min_ratio;
    v.limsup_estimate = last->max_ratio;

    double spread_min = 0.0, spread_max = 0.0;
    for (std::size_t i = filled.size() - 3; i < filled.size(); ++i) {
        spread_min = std::max(spread_min, std::abs(filled[i]->min_ratio - last->min_ratio));
        spread_max = std::max(spread_max, std::abs(filled[i]->max_ratio - last->max_ratio));
    }
    bool stable = spread_min <= tol && spread_max <= tol;
    bool inside = std::abs(v.liminf_estimate - profile.target) <= tol &&
                  std::abs(v.limsup_estimate - profile.target) <= tol;
    if (!stable) {
        v.outcome = VerdictOutcome::inconclusive;
    } else if (inside) {
        v.outcome = VerdictOutcome::holds;
    } else {
        v.outcome = VerdictOutcome::fails;
        bool min_out = std::abs(v.liminf_estimate - profile.target) > tol;
        v.witness = min_out ? last->witness_min : last->witness_max;
    }
    return v;
}

// Local dilatation of the identity map (X, d1) -> (X, d2) at the anchor:
// shrinking-ball sup of d2(x,y)/d1(x,y). Pairs are sampled against the anchor
// and along branches through the anchor (all directions for open carriers),
// plus seeded random pairs inside the ball.
inline double local_dilatation(const MetricSpace& space1, const MetricSpace& space2,
                               const Point& a, double r0, int levels, int pairs_per_level,
                               std::uint64_t seed) {
    if (!(r0 > 0.0)) throw BadParams("local_dilatation: r0 must be positive");
    if (levels < 1 || levels > 40) throw BadParams("local_dilatation: levels in [1, 40]");
    if (pairs_per_level < 16) throw BadParams("local_dilatation: pairs_per_level must be >= 16");
    detail::check_shared_carrier(space1, space2, a);

    Rng rng(seed);
    const int directions = 16;
    double best = std::numeric_limits<double>::quiet_NaN();

    for (int j = 0; j < levels; ++j) {
        double r = r0 * std::ldexp(1.0, -j);
        std::vector<detail::SamplePoint> pts;
        for (double rr : {r, 0.5 * r}) {
            auto shell = detail::sample_sphere(space1, space2, a, rr, directions);
            std::size_t stride = std::max<std::size_t>(1, shell.size() / 48);
            for (std::size_t i = 0; i < shell.size(); i += stride) pts.push_back(shell[i]);
        }
        for (int k = 0; k < pairs_per_level; ++k) {
            double frac = 0.25 + 0.75 * rng.unit();
            auto extra = detail::sample_sphere(space1, space2, a, frac * r, directions);
            if (!extra.empty())
                pts.push_back(extra[static_cast<std::size_t>(rng.next() % extra.size())]);
        }

        double level_max = -std::numeric_limits<double>::infinity();
        int found = 0;
        auto consider = [&](const Point& u, const Point& v) {
            double d1 = space1.distance(u, v);
            if (!(d1 > 0.0)) return;
            double ratio = space2.distance(u, v) / d1;
            if (ratio > level_max) level_max = ratio;
            ++found;
        };
        for (const auto& s : pts) consider(s.p, a);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j2 = i + 1; j2 < pts.size(); ++j2)
                if (pts[i].through_anchor && pts[j2].through_anchor &&
                    !(pts[i].p == pts[j2].p))
                    consider(pts[i].p, pts[j2].p);
        if (found > 0) best = level_max;
    }
    if (std::isnan(best)) throw InsufficientData("local_dilatation: no carrier samples found");
    return best;
}

// The quotient |d2(x,y) - d1(x,y)| / (d1(x,a) + d1(y,a)), evaluated exactly.
inline double infinitesimal_defect(const MetricSpace& space1, const MetricSpace& space2,
                                   const Point& a, const Point& x, const Point& y) {
    detail::check_shared_carrier(space1, space2, a);
    double den = space1.distance(x, a) + space1.distance(y, a);
    if (!(den > 0.0))
        throw ZeroDenominator("infinitesimal_defect: d1(x,a) + d1(y,a) must be positive");
    return std::abs(space2.distance(x, y) - space1.distance(x, y)) / den;
}

}  // namespace metriclab
