#pragma once

// Seeded generators. Every draw goes through std::mt19937_64 with integer
// thresholds so a seed reproduces the same graphs on every platform.

#include <cstdint>
#include <random>

#include "kham/graph.hpp"

namespace kham {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    /// True with probability threshold / 2^64.
    bool chance(std::uint64_t threshold) { return next() < threshold; }

private:
    std::mt19937_64 engine_;
};

/// p in [0, 1] as a 64-bit comparison threshold.
std::uint64_t probability_threshold(double p);

/// G(n, p) on n <= 64 vertices.
SmallGraph random_graph(int n, std::uint64_t threshold, Rng& rng);
/// Every cross-part pair of the block partition with the given probability.
SmallGraph random_kpartite(int n, int k, std::uint64_t threshold, Rng& rng);

/// p such that P(Bin(trials, p) >= target)^n = 1/2, i.e. the minimum degree of
/// an n-vertex graph with `trials` possible neighbours per vertex reaches target
/// about half the time (independence approximation). Bisection, 60 rounds.
double probability_for_min_degree(int n, int trials, int target);

}  // namespace kham
