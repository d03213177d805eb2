#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "metriclab/axioms.hpp"
#include "metriclab/intrinsic.hpp"
#include "metriclab/composition.hpp"
#include "metriclab/similarity.hpp"

namespace metriclab {

// 9 significant digits for text tables.
inline std::string format_g9(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline nlohmann::json to_json(const Point& p) {
    if (p.dim == 1) return nlohmann::json::array({p.x});
    return nlohmann::json::array({p.x, p.y});
}

inline nlohmann::json to_json(const ExtendedLength& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

inline nlohmann::json to_json(const LengthResult& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [size, s] : r.trace)
        trace.push_back({{"knots", size}, {"S", s}});
    return {{"status", length_status_name(r.status)},
            {"value", to_json(r.value)},
            {"trace", trace}};
}

inline nlohmann::json to_json(const IntrinsicEstimate& e) {
    return {{"status", length_status_name(e.status)},
            {"upper_bound", to_json(e.upper_bound)},
            {"iterations", e.iterations},
            {"control_points", e.path.control_points().size()}};
}

inline nlohmann::json to_json(const RatioProfile& p) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : p.records) {
        nlohmann::json rec = {{"radius", r.radius}, {"samples", r.sample_count}};
        if (r.sample_count > 0) {
            rec["min"] = r.min_ratio;
            rec["max"] = r.max_ratio;
        }
        records.push_back(rec);
    }
    return {{"anchor", to_json(p.anchor)},
            {"mode", p.mode == ProfileMode::point_vs_anchor ? "point_vs_anchor" : "pair_in_ball"},
            {"relation", relation_name(p.relation)},
            {"records", records}};
}

inline nlohmann::json to_json(const SimilarityVerdict& v) {
    nlohmann::json j = {{"relation", relation_name(v.relation)},
                        {"outcome", outcome_name(v.outcome)},
                        {"liminf", v.liminf_estimate},
                        {"limsup", v.limsup_estimate}};
    if (v.witness)
        j["witness"] = {to_json(v.witness->first), to_json(v.witness->second)};
    return j;
}

inline nlohmann::json to_json(const ComparisonReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"x", to_json(r.x)},
                        {"y", to_json(r.y)},
                        {"est1", std::isinf(r.estimate1) ? nlohmann::json("inf")
                                                         : nlohmann::json(r.estimate1)},
                        {"ref2", std::isinf(r.reference2) ? nlohmann::json("inf")
                                                          : nlohmann::json(r.reference2)},
                        {"ref_is_closed_form", r.reference_is_closed_form},
                        {"rel_gap", std::isinf(r.rel_gap) ? nlohmann::json("inf")
                                                          : nlohmann::json(r.rel_gap)},
                        {"status", length_status_name(r.status1)},
                        {"pass", r.pass}});
    }
    return {{"rows", rows}, {"max_rel_gap", rep.max_rel_gap}, {"pass", rep.pass}};
}

inline nlohmann::json to_json(const CompositionReport& r) {
    return {{"f0_zero", r.f0_zero},
            {"Q_estimate", r.Q_estimate},
            {"lower_bound_C", r.lower_bound_C},
            {"monotone", r.monotone},
            {"concave", r.concave},
            {"verdict", outcome_name(r.verdict)}};
}

inline std::string point_csv(const Point& p) {
    std::ostringstream os;
    os << format_g9(p.x) << "," << (p.dim == 2 ? format_g9(p.y) : "");
    return os.str();
}

// Columns: pair, est1, est2_or_closed_form, rel_gap, status.
inline std::string comparison_to_csv(const ComparisonReport& rep) {
    std::ostringstream os;
    os << "pair,est1,est2_or_closed_form,rel_gap,status\n";
    for (const auto& r : rep.rows) {
        os << "\"" << point_csv(r.x) << "->" << point_csv(r.y) << "\","
           << format_g9(r.estimate1) << "," << format_g9(r.reference2) << ","
           << format_g9(r.rel_gap) << "," << (r.pass ? "pass" : "fail") << "\n";
    }
    return os.str();
}

}  // namespace metriclab
