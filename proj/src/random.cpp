#include "kham/random.hpp"

#include <cmath>
#include <limits>

#include "kham/error.hpp"

namespace kham {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        const std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

std::uint64_t probability_threshold(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probability outside [0, 1]");
    if (p >= 1.0) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

SmallGraph random_graph(int n, std::uint64_t threshold, Rng& rng) {
    if (n < 1 || n > kMaxSmallOrder) throw InvalidArgument("random_graph needs 1 <= n <= 64");
    SmallGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(threshold)) g.add_edge(u, v);
    return g;
}

SmallGraph random_kpartite(int n, int k, std::uint64_t threshold, Rng& rng) {
    if (n < 1 || n > kMaxSmallOrder || k < 1 || n % k != 0) throw InvalidArgument("random_kpartite needs k | n <= 64");
    const int m = n / k;
    SmallGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / m != v / m && rng.chance(threshold)) g.add_edge(u, v);
    return g;
}

namespace {

// P(Bin(trials, p) >= target)
double upper_tail(int trials, double p, int target) {
    if (target <= 0) return 1.0;
    if (target > trials) return 0.0;
    double total = 0.0;
    for (int j = target; j <= trials; ++j)
        total += std::exp(std::lgamma(trials + 1.0) - std::lgamma(j + 1.0) - std::lgamma(trials - j + 1.0) +
                          j * std::log(p) + (trials - j) * std::log1p(-p));
    return total;
}

}  // namespace

double probability_for_min_degree(int n, int trials, int target) {
    if (target > trials) throw InvalidArgument("degree target exceeds the number of possible neighbours");
    if (target <= 0) return 0.0;
    double lo = 0.0, hi = 1.0;
    for (int round = 0; round < 60; ++round) {
        const double mid = 0.5 * (lo + hi);
        const double all_reach = std::pow(upper_tail(trials, mid, target), n);
        (all_reach < 0.5 ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace kham
