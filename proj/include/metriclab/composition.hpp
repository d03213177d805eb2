#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/similarity.hpp"
#include "metriclab/special_functions.hpp"

namespace metriclab {

// Checks the hypotheses under which d2 = f(d1) is locally similar to Q*d1:
// f(0) = 0, f(t)/t -> Q in (0, inf), and f(t) >= C min{t, 1} for some C > 0.
// Monotonicity and concavity are reported as the stronger sufficient set.
struct CompositionReport {
    bool f0_zero = false;
    double Q_estimate = 0.0;
    double lower_bound_C = 0.0;
    bool monotone = false;
    bool concave = false;
    VerdictOutcome verdict = VerdictOutcome::fails;
};

inline CompositionReport composition_check(const std::function<double(double)>& f,
                                           double grid_max, int grid_size, double tol) {
    if (grid_size < 100) throw BadParams("composition_check: grid_size must be >= 100");
    if (!(grid_max >= 2.0)) throw BadParams("composition_check: grid_max must be >= 2");
    if (!(tol > 0.0)) throw BadParams("composition_check: tol must be positive");

    CompositionReport rep;
    double f0 = f(0.0);
    if (!std::isfinite(f0)) throw NonFiniteValue("composition_check: f(0) is not finite");
    rep.f0_zero = std::abs(f0) <= 1e-12;

    // Q by two-level Richardson on the dyadic ladder t_j = 2^-j.
    std::vector<double> richardson;
    double q_prev = 0.0;
    for (int j = 8; j <= 17; ++j) {
        double t = std::ldexp(1.0, -j);
        double v = f(t);
        if (!std::isfinite(v))
            throw NonFiniteValue("composition_check: f not finite near zero");
        double q = v / t;
        if (j > 8) richardson.push_back(2.0 * q - q_prev);
        q_prev = q;
    }
    rep.Q_estimate = richardson.back();
    double q_spread = 0.0;
    for (std::size_t i = richardson.size() - 3; i < richardson.size(); ++i)
        q_spread = std::max(q_spread, std::abs(richardson[i] - rep.Q_estimate));
    bool q_stable = std::isfinite(rep.Q_estimate) &&
                    q_spread <= 1e-3 * std::max(1.0, std::abs(rep.Q_estimate));

    std::vector<double> ts(grid_size), vs(grid_size);
    double vmax = 0.0;
    for (int i = 1; i <= grid_size; ++i) {
        double t = grid_max * static_cast<double>(i) / grid_size;
        double v = f(t);
        if (!std::isfinite(v)) throw NonFiniteValue("composition_check: f not finite on grid");
        ts[i - 1] = t;
        vs[i - 1] = v;
        vmax = std::max(vmax, std::abs(v));
    }
    rep.lower_bound_C = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i)
        rep.lower_bound_C = std::min(rep.lower_bound_C, vs[i] / std::min(ts[i], 1.0));

    rep.monotone = f0 <= vs[0] + 1e-12;
    for (int i = 0; i + 1 < grid_size && rep.monotone; ++i)
        if (vs[i + 1] < vs[i] - 1e-10 * (1.0 + vmax)) rep.monotone = false;

    rep.concave = true;
    for (int i = 1; i + 1 < grid_size && rep.concave; ++i)
        if (vs[i + 1] - 2.0 * vs[i] + vs[i - 1] > 1e-9 * (1.0 + vmax)) rep.concave = false;

    bool c_positive = rep.lower_bound_C > tol;
    bool q_positive = q_stable && rep.Q_estimate > tol;
    rep.verdict =
        (rep.f0_zero && q_positive && c_positive) ? VerdictOutcome::holds : VerdictOutcome::fails;
    return rep;
}

// Named composition functions matching the kernel-distance catalog. They are
// written to stay accurate near zero, where the naive forms cancel.
inline std::function<double(double)> composition_function(const std::string& name, double sigma,
                                                          int m) {
    if (name == "bergman") {
        // t sqrt(2 - t^2) on [0, 1], continued by its maximum beyond
        return [](double t) { return t <= 1.0 ? t * std::sqrt(2.0 - t * t) : 1.0; };
    }
    if (name == "gaussian") {
        if (!(sigma > 0.0)) throw BadParams("gaussian composition: sigma must be positive");
        return [sigma](double t) { return std::sqrt(-std::expm1(-2.0 * sigma * sigma * t * t)); };
    }
    if (name == "fock") {
        return [](double t) { return std::sqrt(-std::expm1(-t * t)); };
    }
    if (name == "polyfock") {
        if (m < 1 || m > kLaguerreMaxDegree) throw BadParams("polyfock composition: m in [1, 64]");
        return [m](double t) {
            double s = t * t;
            double g = laguerre_associated(m - 1, 1, s) / m;
            return std::sqrt(std::max(0.0, 1.0 - std::exp(-s) * g * g));
        };
    }
    if (name == "paley_wiener") {
        // pre-scaled so the slope at zero is 1
        return [](double t) {
            return std::sqrt(std::max(0.0, one_minus_sinc_sq(std::sqrt(3.0) * t / std::numbers::pi)));
        };
    }
    if (name == "truncation") {
        return [](double t) { return std::min(1.0, t); };
    }
    if (name == "quadratic") {
        return [](double t) { return t * t; };
    }
    throw UnknownFamily("composition_function: unknown name '" + name + "'");
}

inline const std::vector<std::string>& composition_names() {
    static const std::vector<std::string> names{
        "bergman", "gaussian", "fock", "polyfock", "paley_wiener", "truncation", "quadratic"};
    return names;
}

// The catalog members that are concave increasing on [0, inf).
inline bool composition_is_concave(const std::string& name) {
    return name == "bergman" || name == "gaussian" || name == "fock" || name == "truncation";
}

}  // namespace metriclab
