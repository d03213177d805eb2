#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "metriclab/core.hpp"

namespace metriclab {

// Finite ascending set of knots in [a, b] containing both endpoints.
class Partition {
public:
    explicit Partition(std::vector<double> knots) : knots_(std::move(knots)) {
        if (knots_.size() < 2) throw std::invalid_argument("partition needs at least 2 knots");
        for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
            if (!(knots_[i] < knots_[i + 1]))
                throw std::invalid_argument("partition knots must be strictly ascending");
    }

    static Partition trivial(double a = 0.0, double b = 1.0) { return Partition({a, b}); }

    static Partition uniform(double a, double b, int segments) {
        if (segments < 1) throw std::invalid_argument("uniform partition needs >= 1 segment");
        std::vector<double> k(segments + 1);
        for (int i = 0; i <= segments; ++i)
            k[i] = a + (b - a) * static_cast<double>(i) / segments;
        k.front() = a;
        k.back() = b;
        return Partition(std::move(k));
    }

    const std::vector<double>& knots() const { return knots_; }
    double lo() const { return knots_.front(); }
    double hi() const { return knots_.back(); }
    std::size_t size() const { return knots_.size(); }

    bool contains(const Partition& sub) const {
        return std::includes(knots_.begin(), knots_.end(), sub.knots_.begin(), sub.knots_.end());
    }

private:
    std::vector<double> knots_;
};

// Midpoint insertion: every knot kept, each gap split in two; n knots -> 2n-1.
inline Partition refine_partition(const Partition& p) {
    const auto& k = p.knots();
    std::vector<double> out;
    out.reserve(2 * k.size() - 1);
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        out.push_back(k[i]);
        out.push_back(0.5 * (k[i] + k[i + 1]));
    }
    out.push_back(k.back());
    return Partition(std::move(out));
}

// Greedy sweep t_{k+1} = min(b, t_k + theta * R(t_k)). Every produced gap is
// strictly below max{R(t_{k-1}), R(t_k)} since theta < 1.
inline Partition cover_partition(const std::function<double(double)>& radius, double a, double b,
                                 double theta, long max_steps) {
    if (!(a < b)) throw BadParams("cover_partition: need a < b");
    if (!(theta > 0.0 && theta < 1.0)) throw BadParams("cover_partition: need 0 < theta < 1");
    if (max_steps < 2) throw BadParams("cover_partition: max_steps too small");

    std::vector<double> knots{a};
    double t = a;
    while (t < b) {
        double r = radius(t);
        if (!(r > 0.0) || !std::isfinite(r))
            throw NonFiniteValue("cover_partition: R(t) must be positive and finite");
        double next = t + theta * r;
        if (next >= b) next = b;
        if (!(next > t))
            throw StepLimitExceeded("cover_partition: step underflow, R too small near t");
        knots.push_back(next);
        t = next;
        if (static_cast<long>(knots.size()) > max_steps)
            throw StepLimitExceeded("cover_partition: exceeded max_steps knots");
    }
    return Partition(std::move(knots));
}

}  // namespace metriclab
