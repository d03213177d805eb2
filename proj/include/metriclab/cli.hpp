#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metriclab/path_length.hpp"
#include "metriclab/reproduce.hpp"
#include "metriclab/spec_string.hpp"

namespace metriclab::cli {

// Exit codes: 0 success/pass, 1 fail verdicts, 2 usage errors, 3 runtime errors.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

namespace detail {

inline Point parse_point(const std::string& text, int expected_dim) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (!item.empty()) {
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(item, &used));
                if (used != item.size()) throw BadParams("");
            } catch (...) {
                throw BadParams("bad coordinate '" + item + "' in point '" + text + "'");
            }
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(vals.size()) != expected_dim)
        throw BadParams("point '" + text + "' has " + std::to_string(vals.size()) +
                        " coordinates, space needs " + std::to_string(expected_dim));
    return expected_dim == 1 ? point1(vals[0]) : point2(vals[0], vals[1]);
}

// Pair files are CSV with header x1,x2,y1,y2; the second coordinate stays
// blank for 1D carriers.
inline std::vector<std::pair<Point, Point>> read_pairs_csv(const std::string& path, int dim) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open pairs file: " + path);
    std::vector<std::pair<Point, Point>> pairs;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (cells.size() != 4)
            throw BadParams("pairs file row needs 4 cells (x1,x2,y1,y2): " + line);
        auto cell_point = [&](const std::string& c1, const std::string& c2) {
            std::string joined = c1 + (c2.empty() ? "" : "," + c2);
            return parse_point(joined, dim);
        };
        pairs.emplace_back(cell_point(cells[0], cells[1]), cell_point(cells[2], cells[3]));
    }
    if (pairs.empty()) throw BadParams("pairs file has no data rows: " + path);
    return pairs;
}

inline void print_profile(std::ostream& os, const RatioProfile& prof) {
    os << "radius,min,max,samples\n";
    for (const auto& r : prof.records) {
        os << format_g9(r.radius) << ",";
        if (r.sample_count > 0)
            os << format_g9(r.min_ratio) << "," << format_g9(r.max_ratio);
        else
            os << ",";
        os << "," << r.sample_count << "\n";
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
    CLI::App app{"metriclab: intrinsic distances, similarity diagnostics, kernel distances"};
    app.require_subcommand(1);

    std::string space_text, space1_text, space2_text;
    std::string x_text, y_text, from_text, to_text, anchor_text;
    std::string pairs_file, relation = "local", comp_name, example_id;
    bool json_out = false, list_examples = false;
    double tol = 1e-2, r0 = 0.25, comp_sigma = 1.0, grid_max = 2.0;
    int max_depth = 12, levels = 10, directions = 16, comp_m = 1, grid_size = 200;
    int segments = 32, relax_rounds = 300, pairs_per_level = 16;
    std::uint64_t seed = 1;
    double length_tol = 1e-8;

    auto* eval = app.add_subcommand("eval", "evaluate d(x, y) for a space");
    eval->add_option("--space", space_text, "space spec, e.g. pseudolog_halfline()")->required();
    eval->add_option("--x", x_text)->required();
    eval->add_option("--y", y_text)->required();

    auto* profile = app.add_subcommand("length-profile",
                                       "polygonal sums S under dyadic refinement");
    profile->add_option("--space", space_text)->required();
    profile->add_option("--from", from_text)->required();
    profile->add_option("--to", to_text)->required();
    profile->add_option("--max-depth", max_depth);
    profile->add_flag("--json", json_out);

    auto* intr = app.add_subcommand("intrinsic", "estimate the intrinsic distance d*(x, y)");
    intr->add_option("--space", space_text)->required();
    intr->add_option("--x", x_text)->required();
    intr->add_option("--y", y_text)->required();
    intr->add_option("--segments", segments);
    intr->add_option("--tol", length_tol);
    intr->add_option("--relax-rounds", relax_rounds);
    intr->add_option("--seed", seed);
    intr->add_flag("--json", json_out);

    auto* cmp = app.add_subcommand("compare", "compare intrinsic estimates of two spaces");
    cmp->add_option("--space1", space1_text)->required();
    cmp->add_option("--space2", space2_text)->required();
    cmp->add_option("--pairs", pairs_file, "CSV with header x1,x2,y1,y2")->required();
    cmp->add_option("--tol", tol);
    cmp->add_option("--segments", segments);
    cmp->add_option("--relax-rounds", relax_rounds);
    cmp->add_option("--seed", seed);
    cmp->add_flag("--json", json_out);

    auto* sim = app.add_subcommand("similarity", "similarity diagnostics between two distances");
    sim->add_option("--space1", space1_text)->required();
    sim->add_option("--space2", space2_text)->required();
    sim->add_option("--anchor", anchor_text)->required();
    sim->add_option("--relation", relation)
        ->check(CLI::IsMember({"local", "strong", "infinitesimal", "dilatation"}));
    sim->add_option("--r0", r0);
    sim->add_option("--levels", levels);
    sim->add_option("--directions", directions);
    sim->add_option("--pairs-per-level", pairs_per_level);
    sim->add_option("--tol", tol);
    sim->add_option("--seed", seed);
    sim->add_flag("--json", json_out);

    auto* comp = app.add_subcommand("composition", "check the d2 = f(d1) similarity conditions");
    comp->add_option("--f", comp_name, "bergman|gaussian|fock|polyfock|paley_wiener|truncation|quadratic")
        ->required();
    comp->add_option("--sigma", comp_sigma);
    comp->add_option("--m", comp_m);
    comp->add_option("--grid-max", grid_max);
    comp->add_option("--grid-size", grid_size);
    comp->add_option("--tol", tol);
    comp->add_flag("--json", json_out);

    auto* rep = app.add_subcommand("reproduce", "run a canned example scenario");
    rep->add_option("--example", example_id);
    rep->add_flag("--list", list_examples);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help() << "\n";
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            MetricSpace space = parse_space_spec(space_text);
            Point x = detail::parse_point(x_text, space.dimensionality());
            Point y = detail::parse_point(y_text, space.dimensionality());
            std::cout << format_g9(space.distance(x, y)) << "\n";
            return kExitPass;
        }
        if (profile->parsed()) {
            MetricSpace space = parse_space_spec(space_text);
            Point a = detail::parse_point(from_text, space.dimensionality());
            Point b = detail::parse_point(to_text, space.dimensionality());
            LengthResult lr = length_profile(straight_path(space, a, b), max_depth);
            if (json_out) {
                std::cout << to_json(lr).dump(2) << "\n";
            } else {
                std::cout << "knots,S\n";
                for (const auto& [knots, s] : lr.trace)
                    std::cout << knots << "," << format_g9(s) << "\n";
                std::cout << "# status: " << length_status_name(lr.status) << "\n";
            }
            return kExitPass;
        }
        if (intr->parsed()) {
            MetricSpace space = parse_space_spec(space_text);
            Point x = detail::parse_point(x_text, space.dimensionality());
            Point y = detail::parse_point(y_text, space.dimensionality());
            EstimatorConfig cfg;
            cfg.segments = segments;
            cfg.relax_rounds = relax_rounds;
            cfg.length_tol = length_tol;
            cfg.seed = seed;
            IntrinsicEstimate est = estimate_intrinsic(space, x, y, cfg);
            if (json_out)
                std::cout << to_json(est).dump(2) << "\n";
            else
                std::cout << format_g9(est.upper_bound.value()) << " ("
                          << length_status_name(est.status) << ", " << est.iterations
                          << " accepted moves)\n";
            return kExitPass;
        }
        if (cmp->parsed()) {
            MetricSpace s1 = parse_space_spec(space1_text);
            MetricSpace s2 = parse_space_spec(space2_text);
            if (s1.dimensionality() != s2.dimensionality())
                throw BadParams("compare: spaces have different carrier dimensions");
            auto pairs = detail::read_pairs_csv(pairs_file, s1.dimensionality());
            EstimatorConfig cfg;
            cfg.segments = segments;
            cfg.relax_rounds = relax_rounds;
            cfg.seed = seed;
            ComparisonReport report = verify_theorem_instance(s1, s2, pairs, cfg, tol);
            if (json_out)
                std::cout << to_json(report).dump(2) << "\n";
            else
                std::cout << comparison_to_csv(report);
            return report.pass ? kExitPass : kExitFail;
        }
        if (sim->parsed()) {
            MetricSpace s1 = parse_space_spec(space1_text);
            MetricSpace s2 = parse_space_spec(space2_text);
            Point anchor = detail::parse_point(anchor_text, s1.dimensionality());
            if (relation == "dilatation") {
                double dil =
                    local_dilatation(s1, s2, anchor, r0, levels, pairs_per_level, seed);
                if (json_out)
                    std::cout << nlohmann::json{{"dilatation", dil}}.dump(2) << "\n";
                else
                    std::cout << "dilatation " << format_g9(dil) << "\n";
                return kExitPass;
            }
            RatioProfile prof;
            if (relation == "local")
                prof = local_ratio_profile(s1, s2, anchor, r0, levels, directions,
                                           ProfileMode::point_vs_anchor);
            else if (relation == "strong")
                prof = local_ratio_profile(s1, s2, anchor, r0, levels, directions,
                                           ProfileMode::pair_in_ball);
            else
                prof = infinitesimal_profile(s1, s2, anchor, r0, levels, directions);
            SimilarityVerdict verdict = similarity_verdict(prof, tol);
            if (json_out) {
                nlohmann::json j{{"profile", to_json(prof)}, {"verdict", to_json(verdict)}};
                std::cout << j.dump(2) << "\n";
            } else {
                detail::print_profile(std::cout, prof);
                std::cout << "# " << relation_name(verdict.relation) << ": "
                          << outcome_name(verdict.outcome) << " [liminf "
                          << format_g9(verdict.liminf_estimate) << ", limsup "
                          << format_g9(verdict.limsup_estimate) << "]\n";
            }
            return verdict.outcome == VerdictOutcome::fails ? kExitFail : kExitPass;
        }
        if (comp->parsed()) {
            CompositionReport report = composition_check(
                composition_function(comp_name, comp_sigma, comp_m), grid_max, grid_size, tol);
            if (json_out)
                std::cout << to_json(report).dump(2) << "\n";
            else
                std::cout << "Q " << format_g9(report.Q_estimate) << ", C "
                          << format_g9(report.lower_bound_C) << ", monotone " << report.monotone
                          << ", concave " << report.concave << ", verdict "
                          << outcome_name(report.verdict) << "\n";
            return report.verdict == VerdictOutcome::holds ? kExitPass : kExitFail;
        }
        if (rep->parsed()) {
            if (list_examples) {
                for (const auto& id : reproduce_ids()) std::cout << id << "\n";
                return kExitPass;
            }
            if (example_id.empty())
                throw BadParams("reproduce: need --example ID or --list");
            ReproduceResult res = run_reproduce(example_id);
            std::cout << res.id << ": " << (res.pass ? "PASS" : "FAIL") << "\n" << res.detail;
            return res.pass ? kExitPass : kExitFail;
        }
    } catch (const UnknownFamily& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace metriclab::cli
