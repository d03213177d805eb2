#pragma once

#include <cstdint>
#include <random>

namespace metriclab {

// Deterministic RNG wrapper. mt19937_64 output is fully specified by the
// standard; the double conversion here avoids the implementation-defined
// std::uniform_real_distribution so seeded runs are bit-identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * unit();
    }
    std::uint64_t next() { return engine_(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace metriclab
