#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>

#include "metriclab/core.hpp"
#include "metriclab/kernels.hpp"

namespace metriclab {

enum class SpaceFamily {
    euclidean_line,
    euclidean_plane,
    discrete,
    sqrt_line,
    pseudolog_halfline,
    pseudolog_segment,
    pseudohyperbolic_halfplane,
    pseudohyperbolic_disk,
    circular_interval,
    truncated_euclidean,
    bilipschitz_example,
    comb_euclidean,
    comb_intrinsic,
    hook_taxi,
    hook_euclidean,
};

struct SpaceSpec {
    SpaceFamily family = SpaceFamily::euclidean_line;
    double seg_lo = 1.0;     // pseudolog_segment endpoints
    double seg_hi = 2.0;
    double cap = 1.0;        // truncated_euclidean
    int tooth_count = 1000;  // comb families: teeth at 1/q, q = 1..tooth_count
};

inline const char* space_family_name(SpaceFamily f) {
    switch (f) {
        case SpaceFamily::euclidean_line: return "euclidean_line";
        case SpaceFamily::euclidean_plane: return "euclidean_plane";
        case SpaceFamily::discrete: return "discrete";
        case SpaceFamily::sqrt_line: return "sqrt_line";
        case SpaceFamily::pseudolog_halfline: return "pseudolog_halfline";
        case SpaceFamily::pseudolog_segment: return "pseudolog_segment";
        case SpaceFamily::pseudohyperbolic_halfplane: return "pseudohyperbolic_halfplane";
        case SpaceFamily::pseudohyperbolic_disk: return "pseudohyperbolic_disk";
        case SpaceFamily::circular_interval: return "circular_interval";
        case SpaceFamily::truncated_euclidean: return "truncated_euclidean";
        case SpaceFamily::bilipschitz_example: return "bilipschitz_example";
        case SpaceFamily::comb_euclidean: return "comb_euclidean";
        case SpaceFamily::comb_intrinsic: return "comb_intrinsic";
        case SpaceFamily::hook_taxi: return "hook_taxi";
        case SpaceFamily::hook_euclidean: return "hook_euclidean";
    }
    return "?";
}

inline void validate(const SpaceSpec& s) {
    switch (s.family) {
        case SpaceFamily::pseudolog_segment:
            if (!(s.seg_lo > 0.0) || !(s.seg_hi > s.seg_lo))
                throw BadParams("pseudolog_segment: need 0 < a < b");
            break;
        case SpaceFamily::truncated_euclidean:
            if (!(s.cap > 0.0)) throw BadParams("truncated_euclidean: cap must be positive");
            break;
        case SpaceFamily::comb_euclidean:
        case SpaceFamily::comb_intrinsic:
            if (s.tooth_count < 1) throw BadParams("comb: tooth_count must be >= 1");
            break;
        default:
            break;
    }
}

namespace detail {

inline bool on_comb_spine(const Point& p) {
    return std::abs(p.y) <= kCarrierGuard && p.x >= -kCarrierGuard && p.x <= 1.0 + kCarrierGuard;
}

// Tooth abscissas are the doubles 1.0/q. Matching snaps within the guard band.
inline std::optional<int> comb_tooth_of(double x, int tooth_count) {
    if (!(x > 0.0)) return std::nullopt;
    int q0 = static_cast<int>(std::lround(1.0 / x));
    for (int q = std::max(1, q0 - 1); q <= q0 + 1; ++q) {
        if (q > tooth_count) break;
        if (std::abs(x - 1.0 / q) <= kCarrierGuard) return q;
    }
    return std::nullopt;
}

inline bool comb_contains(const Point& p, int tooth_count) {
    if (p.dim != 2 || !std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    if (on_comb_spine(p)) return true;
    if (p.y < -kCarrierGuard || p.y > 1.0 + kCarrierGuard) return false;
    return comb_tooth_of(p.x, tooth_count).has_value();
}

inline bool comb_same_column(const Point& a, const Point& b) {
    return std::abs(a.x - b.x) <= kCarrierGuard;
}

inline double comb_rho(const Point& a, const Point& b) {
    if (comb_same_column(a, b)) return std::abs(a.y - b.y);
    // parenthesized so the rounding is symmetric in a and b
    return std::abs(a.x - b.x) + (a.y + b.y);
}

inline bool hook_contains(const Point& p) {
    if (p.dim != 2 || !std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    bool x_axis = std::abs(p.y) <= kCarrierGuard && p.x >= -kCarrierGuard;
    bool y_axis = std::abs(p.x) <= kCarrierGuard && p.y >= -kCarrierGuard;
    return x_axis || y_axis;
}

inline double atanh_clamped(double r) {
    // r is a pseudohyperbolic distance in [0, 1); clamp guards roundoff at 1.
    return std::atanh(std::min(r, 1.0 - 1e-16));
}

}  // namespace detail

// Immutable handle for a named, parameterized distance: evaluable pairwise,
// with carrier membership tests and an optional closed-form intrinsic
// distance. Kernel-induced distances d_K are handles as well.
class MetricSpace {
public:
    explicit MetricSpace(const SpaceSpec& spec, double scale = 1.0)
        : spec_(spec), scale_(scale) {
        validate(spec);
        if (!(scale_ > 0.0)) throw BadParams("scale must be positive");
    }
    explicit MetricSpace(const KernelSpec& spec, double scale = 1.0)
        : spec_(spec), scale_(scale) {
        validate(spec);
        if (!(scale_ > 0.0)) throw BadParams("scale must be positive");
    }

    bool is_kernel_backed() const { return std::holds_alternative<KernelSpec>(spec_); }
    const SpaceSpec* space_spec() const { return std::get_if<SpaceSpec>(&spec_); }
    const KernelSpec* kernel_spec() const { return std::get_if<KernelSpec>(&spec_); }
    double scale() const { return scale_; }

    std::string name() const {
        if (auto* k = kernel_spec()) return kernel_family_name(k->family);
        return space_family_name(space_spec()->family);
    }

    int dimensionality() const {
        if (auto* k = kernel_spec()) return kernel_dimension(*k);
        switch (space_spec()->family) {
            case SpaceFamily::euclidean_plane:
            case SpaceFamily::pseudohyperbolic_halfplane:
            case SpaceFamily::pseudohyperbolic_disk:
            case SpaceFamily::comb_euclidean:
            case SpaceFamily::comb_intrinsic:
            case SpaceFamily::hook_taxi:
            case SpaceFamily::hook_euclidean:
                return 2;
            default:
                return 1;
        }
    }

    bool contains(const Point& p) const {
        if (p.dim != dimensionality()) return false;
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
        if (auto* k = kernel_spec()) return kernel_carrier_contains(*k, p);
        const SpaceSpec& s = *space_spec();
        switch (s.family) {
            case SpaceFamily::euclidean_line:
            case SpaceFamily::discrete:
            case SpaceFamily::sqrt_line:
            case SpaceFamily::truncated_euclidean:
            case SpaceFamily::euclidean_plane:
                return true;
            case SpaceFamily::pseudolog_halfline:
                return p.x > kCarrierGuard;
            case SpaceFamily::pseudolog_segment:
                return p.x >= s.seg_lo - kCarrierGuard && p.x <= s.seg_hi + kCarrierGuard;
            case SpaceFamily::pseudohyperbolic_halfplane:
                return p.y > kCarrierGuard;
            case SpaceFamily::pseudohyperbolic_disk:
                return std::hypot(p.x, p.y) < 1.0 - kCarrierGuard;
            case SpaceFamily::circular_interval:
                return p.x > kCarrierGuard && p.x < 2.0 * std::numbers::pi - kCarrierGuard;
            case SpaceFamily::bilipschitz_example:
                return p.x >= -kCarrierGuard && p.x <= 1.0 + kCarrierGuard;
            case SpaceFamily::comb_euclidean:
            case SpaceFamily::comb_intrinsic:
                return detail::comb_contains(p, s.tooth_count);
            case SpaceFamily::hook_taxi:
            case SpaceFamily::hook_euclidean:
                return detail::hook_contains(p);
        }
        return false;
    }

    void require_point(const Point& p) const {
        if (!contains(p))
            throw CarrierViolation(name() + ": point outside carrier: " + format_point(p));
    }

    double distance(const Point& a, const Point& b) const {
        require_point(a);
        require_point(b);
        if (a == b) return 0.0;  // exact identity before any formula evaluation
        return scale_ * unscaled_distance(a, b);
    }

    bool has_closed_form_intrinsic() const {
        if (auto* k = kernel_spec())
            return k->family == KernelFamily::sobolev_green ||
                   k->family == KernelFamily::min_kernel;
        switch (space_spec()->family) {
            case SpaceFamily::circular_interval:
            case SpaceFamily::truncated_euclidean:
            case SpaceFamily::bilipschitz_example:
                return false;
            default:
                return true;
        }
    }

    // Exact intrinsic distance where a closed form is known; throws
    // UnknownFamily when has_closed_form_intrinsic() is false.
    ExtendedLength closed_form_intrinsic(const Point& a, const Point& b) const {
        if (!has_closed_form_intrinsic())
            throw UnknownFamily(name() + ": no closed-form intrinsic distance");
        require_point(a);
        require_point(b);
        if (a == b) return ExtendedLength::finite(0.0);
        if (is_kernel_backed()) return ExtendedLength::infinite();  // sobolev_green, min_kernel
        switch (space_spec()->family) {
            case SpaceFamily::euclidean_line:
            case SpaceFamily::euclidean_plane:
                return ExtendedLength::finite(distance(a, b));
            case SpaceFamily::discrete:
            case SpaceFamily::sqrt_line:
                return ExtendedLength::infinite();
            case SpaceFamily::pseudolog_halfline:
            case SpaceFamily::pseudolog_segment:
                return ExtendedLength::finite(scale_ * std::abs(std::log(a.x) - std::log(b.x)));
            case SpaceFamily::pseudohyperbolic_halfplane:
            case SpaceFamily::pseudohyperbolic_disk:
                return ExtendedLength::finite(
                    scale_ * detail::atanh_clamped(unscaled_distance(a, b)));
            case SpaceFamily::comb_euclidean:
            case SpaceFamily::comb_intrinsic:
                return ExtendedLength::finite(scale_ * detail::comb_rho(a, b));
            case SpaceFamily::hook_taxi:
            case SpaceFamily::hook_euclidean:
                return ExtendedLength::finite(
                    scale_ * (std::abs(a.x - b.x) + std::abs(a.y - b.y)));
            default:
                throw UnknownFamily(name() + ": no closed-form intrinsic distance");
        }
    }

    // Straight chords between carrier points stay inside these carriers.
    bool chord_stays_in_carrier() const {
        return !has_branch_carrier();
    }

    // Comb and hook carriers are unions of segments; paths follow the branches.
    bool has_branch_carrier() const {
        if (is_kernel_backed()) return false;
        switch (space_spec()->family) {
            case SpaceFamily::comb_euclidean:
            case SpaceFamily::comb_intrinsic:
            case SpaceFamily::hook_taxi:
            case SpaceFamily::hook_euclidean:
                return true;
            default:
                return false;
        }
    }

    bool supports_relaxation() const { return !has_branch_carrier(); }

    MetricSpace rescaled(double factor) const {
        MetricSpace copy = *this;
        copy.scale_ = scale_ * factor;
        if (!(copy.scale_ > 0.0)) throw BadParams("scale must be positive");
        return copy;
    }

private:
    double unscaled_distance(const Point& a, const Point& b) const {
        if (auto* k = kernel_spec()) return kernel_distance(*k, a, b);
        const SpaceSpec& s = *space_spec();
        switch (s.family) {
            case SpaceFamily::euclidean_line:
                return std::abs(a.x - b.x);
            case SpaceFamily::euclidean_plane:
                return std::hypot(a.x - b.x, a.y - b.y);
            case SpaceFamily::discrete:
                return 1.0;
            case SpaceFamily::sqrt_line:
                return std::sqrt(std::abs(a.x - b.x));
            case SpaceFamily::pseudolog_halfline:
            case SpaceFamily::pseudolog_segment:
                return 2.0 * std::abs(a.x - b.x) / (a.x + b.x);
            case SpaceFamily::pseudohyperbolic_halfplane: {
                double num = std::hypot(b.x - a.x, b.y - a.y);
                double den = std::hypot(b.x - a.x, b.y + a.y);
                return num / den;
            }
            case SpaceFamily::pseudohyperbolic_disk: {
                std::complex<double> z = to_complex(a), w = to_complex(b);
                return std::abs(w - z) / std::abs(1.0 - w * std::conj(z));
            }
            case SpaceFamily::circular_interval:
                return 2.0 * std::abs(std::sin(0.5 * (a.x - b.x)));
            case SpaceFamily::truncated_euclidean:
                return std::min(s.cap, std::abs(a.x - b.x));
            case SpaceFamily::bilipschitz_example:
                return std::abs(a.x - b.x) * (1.0 + (a.x + b.x));
            case SpaceFamily::comb_euclidean:
                return std::hypot(a.x - b.x, a.y - b.y);
            case SpaceFamily::comb_intrinsic:
                return detail::comb_rho(a, b);
            case SpaceFamily::hook_taxi:
                return std::abs(a.x - b.x) + std::abs(a.y - b.y);
            case SpaceFamily::hook_euclidean:
                return std::hypot(a.x - b.x, a.y - b.y);
        }
        throw UnknownFamily("unknown space family");
    }

    std::variant<SpaceSpec, KernelSpec> spec_;
    double scale_ = 1.0;
};

inline MetricSpace make_space(const SpaceSpec& spec, double scale = 1.0) {
    return MetricSpace(spec, scale);
}
inline MetricSpace make_space(const KernelSpec& spec, double scale = 1.0) {
    return MetricSpace(spec, scale);
}
inline MetricSpace make_space(SpaceFamily family, double scale = 1.0) {
    SpaceSpec s;
    s.family = family;
    return MetricSpace(s, scale);
}
inline MetricSpace make_space(KernelFamily family, double scale = 1.0) {
    KernelSpec k;
    k.family = family;
    return MetricSpace(k, scale);
}

}  // namespace metriclab
