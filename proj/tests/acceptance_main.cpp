// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion bundles the matching reproduce scenarios, so the
// same checks are available from the CLI.

#include <chrono>
#include <iostream>
#include <vector>

#include "metriclab/reproduce.hpp"

using namespace metriclab;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> scenario_ids;
};

bool run_criterion(const Criterion& c, bool verbose) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    bool pass = true;
    std::string detail;
    for (const auto& id : c.scenario_ids) {
        ReproduceResult res = run_reproduce(id);
        pass = pass && res.pass;
        detail += res.detail;
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), secs);
    if (verbose || !pass) std::fputs(detail.c_str(), stdout);
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::vector<Criterion> criteria = {
        {1, "pseudologarithmic intrinsic distances match |log x - log y| (1e-4 rel)",
         {"pseudolog_intrinsic"}},
        {2, "half-plane intrinsic estimates match the closed form (1e-2 rel, 10 seeded pairs)",
         {"hyperbolic_halfplane"}},
        {3, "disk intrinsic estimates match the closed form (1e-2 rel, 10 seeded pairs)",
         {"hyperbolic_disk"}},
        {4, "Bergman kernel intrinsic distances match sqrt(2) x hyperbolic (2e-2 rel)",
         {"bergman_disk", "bergman_halfplane"}},
        {5, "square-root profile S = sqrt(m) exactly; divergent families report diverged",
         {"sqrt_length_profile", "sqrt_divergence", "discrete_divergence", "sobolev_divergence",
          "minkernel_divergence"}},
        {6, "similarity verdict table (5e-3 on limit estimates)",
         {"bilipschitz_similarity", "truncated_similarity", "circular_similarity",
          "comb_distortion", "hook_similarity"}},
        {7, "composition constants: Q within 1e-4, concave lower bounds at f(1)",
         {"composition_constants"}},
        {8, "cover partitions satisfy the gap inequality on 1000 seeded radius functions",
         {"cover_lemma"}},
        {9, "kernel sanity: Gram eigenvalues, d_K triangle inequality, Szego identity",
         {"kernel_sanity"}},
        {10, "polygonal sums are monotone under partition refinement (1000 seeded instances)",
         {"refinement_monotonicity"}},
    };

    int failures = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c, verbose)) ++failures;
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
