#pragma once

#include <functional>
#include <span>
#include <vector>

#include "metriclab/core.hpp"
#include "metriclab/spaces.hpp"

namespace metriclab {

struct AxiomCheck {
    bool pass = true;
    double worst = 0.0;                 // largest violation found
    std::vector<Point> witness;         // points achieving it
};

struct AxiomReport {
    AxiomCheck identity;   // d(x,x) = 0
    AxiomCheck symmetry;   // d(x,y) = d(y,x)
    AxiomCheck triangle;   // d(x,z) <= d(x,y) + d(y,z)
    double tol = 0.0;
    bool pass() const { return identity.pass && symmetry.pass && triangle.pass; }
};

using DistanceFn = std::function<double(const Point&, const Point&)>;

// Exhaustive check over all pairs and ordered triples of the sample.
inline AxiomReport check_metric_axioms(const DistanceFn& d, std::span<const Point> sample,
                                       double tol) {
    if (sample.empty()) throw std::invalid_argument("check_metric_axioms: empty sample");
    if (!(tol > 0.0)) throw std::invalid_argument("check_metric_axioms: tol must be positive");

    AxiomReport rep;
    rep.tol = tol;
    const std::size_t n = sample.size();

    for (std::size_t i = 0; i < n; ++i) {
        double v = std::abs(d(sample[i], sample[i]));
        if (v > rep.identity.worst) {
            rep.identity.worst = v;
            rep.identity.witness = {sample[i]};
        }
    }
    rep.identity.pass = rep.identity.worst <= tol;

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) dist[i][j] = d(sample[i], sample[j]);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = std::abs(dist[i][j] - dist[j][i]);
            if (v > rep.symmetry.worst) {
                rep.symmetry.worst = v;
                rep.symmetry.witness = {sample[i], sample[j]};
            }
        }
    }
    rep.symmetry.pass = rep.symmetry.worst <= tol;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                double v = dist[i][k] - dist[i][j] - dist[j][k];
                if (v > rep.triangle.worst) {
                    rep.triangle.worst = v;
                    rep.triangle.witness = {sample[i], sample[j], sample[k]};
                }
            }
        }
    }
    rep.triangle.pass = rep.triangle.worst <= tol;
    return rep;
}

inline AxiomReport check_metric_axioms(const MetricSpace& space, std::span<const Point> sample,
                                       double tol) {
    for (const Point& p : sample) space.require_point(p);
    return check_metric_axioms(
        [&space](const Point& a, const Point& b) { return space.distance(a, b); }, sample, tol);
}

inline bool open_ball_membership(const MetricSpace& space, const Point& center, double radius,
                                 const Point& x) {
    if (!(radius > 0.0)) throw std::invalid_argument("open_ball_membership: radius must be positive");
    return space.distance(x, center) < radius;
}

}  // namespace metriclab
