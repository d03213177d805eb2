#pragma once

#include <map>
#include <string>

#include "metriclab/core.hpp"
#include "metriclab/spaces.hpp"

namespace metriclab {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) throw BadParams("");
        return d;
    } catch (...) {
        throw BadParams("space spec: bad numeric value for '" + key + "': " + v);
    }
}

inline std::map<std::string, double> parse_kv(const std::string& body) {
    std::map<std::string, double> kv;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = trim(body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos));
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw BadParams("space spec: expected key=value, got '" + item + "'");
            std::string key = trim(item.substr(0, eq));
            std::string val = trim(item.substr(eq + 1));
            if (key.empty() || val.empty())
                throw BadParams("space spec: expected key=value, got '" + item + "'");
            if (kv.count(key)) throw BadParams("space spec: duplicate key '" + key + "'");
            kv[key] = parse_number(key, val);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return kv;
}

inline double take(std::map<std::string, double>& kv, const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    double v = it->second;
    kv.erase(it);
    return v;
}

inline void reject_leftovers(const std::map<std::string, double>& kv, const std::string& family) {
    if (!kv.empty())
        throw BadParams("space spec: unknown key '" + kv.begin()->first + "' for " + family);
}

}  // namespace detail

// Parses "family(param=value,...)" into a metric-space handle. Every family
// accepts an optional scale=c multiplying the distance.
inline MetricSpace parse_space_spec(const std::string& text) {
    std::string s = detail::trim(text);
    std::string name = s;
    std::string body;
    std::size_t open = s.find('(');
    if (open != std::string::npos) {
        if (s.back() != ')') throw BadParams("space spec: missing ')': " + text);
        name = detail::trim(s.substr(0, open));
        body = s.substr(open + 1, s.size() - open - 2);
    }
    if (name.empty()) throw BadParams("space spec: empty family name");
    auto kv = detail::parse_kv(body);
    double scale = detail::take(kv, "scale", 1.0);

    static const std::map<std::string, SpaceFamily> space_names{
        {"euclidean_line", SpaceFamily::euclidean_line},
        {"euclidean_plane", SpaceFamily::euclidean_plane},
        {"discrete", SpaceFamily::discrete},
        {"sqrt_line", SpaceFamily::sqrt_line},
        {"pseudolog_halfline", SpaceFamily::pseudolog_halfline},
        {"pseudolog_segment", SpaceFamily::pseudolog_segment},
        {"pseudohyperbolic_halfplane", SpaceFamily::pseudohyperbolic_halfplane},
        {"pseudohyperbolic_disk", SpaceFamily::pseudohyperbolic_disk},
        {"circular_interval", SpaceFamily::circular_interval},
        {"truncated_euclidean", SpaceFamily::truncated_euclidean},
        {"bilipschitz_example", SpaceFamily::bilipschitz_example},
        {"comb_euclidean", SpaceFamily::comb_euclidean},
        {"comb_intrinsic", SpaceFamily::comb_intrinsic},
        {"hook_taxi", SpaceFamily::hook_taxi},
        {"hook_euclidean", SpaceFamily::hook_euclidean},
    };
    static const std::map<std::string, KernelFamily> kernel_names{
        {"szego_disk", KernelFamily::szego_disk},
        {"bergman_disk", KernelFamily::bergman_disk},
        {"bergman_halfplane", KernelFamily::bergman_halfplane},
        {"gaussian", KernelFamily::gaussian},
        {"fock", KernelFamily::fock},
        {"polyfock", KernelFamily::polyfock},
        {"paley_wiener", KernelFamily::paley_wiener},
        {"sobolev_green", KernelFamily::sobolev_green},
        {"min_kernel", KernelFamily::min_kernel},
    };

    if (auto it = space_names.find(name); it != space_names.end()) {
        SpaceSpec spec;
        spec.family = it->second;
        switch (spec.family) {
            case SpaceFamily::pseudolog_segment:
                spec.seg_lo = detail::take(kv, "a", spec.seg_lo);
                spec.seg_hi = detail::take(kv, "b", spec.seg_hi);
                break;
            case SpaceFamily::truncated_euclidean:
                spec.cap = detail::take(kv, "cap", spec.cap);
                break;
            case SpaceFamily::comb_euclidean:
            case SpaceFamily::comb_intrinsic:
                spec.tooth_count = static_cast<int>(detail::take(kv, "qmax", spec.tooth_count));
                break;
            default:
                break;
        }
        detail::reject_leftovers(kv, name);
        return MetricSpace(spec, scale);
    }
    if (auto it = kernel_names.find(name); it != kernel_names.end()) {
        KernelSpec spec;
        spec.family = it->second;
        switch (spec.family) {
            case KernelFamily::gaussian:
                spec.sigma = detail::take(kv, "sigma", spec.sigma);
                spec.dim = static_cast<int>(detail::take(kv, "dim", spec.dim));
                break;
            case KernelFamily::polyfock:
                spec.degree = static_cast<int>(detail::take(kv, "m", spec.degree));
                break;
            case KernelFamily::paley_wiener:
                spec.halfwidth = detail::take(kv, "A", spec.halfwidth);
                break;
            default:
                break;
        }
        detail::reject_leftovers(kv, name);
        return MetricSpace(spec, scale);
    }
    throw UnknownFamily("space spec: unknown family '" + name + "'");
}

}  // namespace metriclab
