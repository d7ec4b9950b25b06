#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kham/arithmetic.hpp"
#include "kham/graph.hpp"
#include "kham/report.hpp"

namespace kham {

/// Shard i of C owns the subtrees whose first kShardPrefixBits pair decisions,
/// read as a binary number (bit j = pair j present), are congruent to i mod C.
struct Shard {
    int index = 0;
    int count = 1;
};

inline constexpr int kShardPrefixBits = 16;
inline constexpr int kExhaustiveGuard = 9;

/// Calls `visit` for every graph on the block partition of (n, k) whose minimum
/// degree is at least `floor`. Cross-part pairs are decided in lexicographic
/// order; a branch dies as soon as some vertex cannot reach the floor with the
/// pairs still undecided. Returns the number of graphs visited.
std::int64_t for_each_kpartite_graph(int n, int k, int floor, Shard shard,
                                     const std::function<void(const SmallGraph&)>& visit);

struct ExhaustiveOptions {
    int n = 0;
    int k = 0;
    std::optional<int> floor;  // default: required_degree(n, k)
    Shard shard;
    int jobs = 1;
    int guard = kExhaustiveGuard;
    int list_cap = 100;     // listed records per category; everything is counted
    bool distinct = false;  // list one graph per isomorphism class
};

/// Every graph at or above the floor must be Hamiltonian when the floor is at
/// least required_degree; below that, non-Hamiltonian graphs are listed as
/// exceptional (classified when n = 2k and 4 | n) and only unclassified ones fail.
VerificationReport exhaustive_verify(const ExhaustiveOptions& options);

struct CharacterizationOptions {
    int n = 8;
    int k = 4;
    Shard shard;
    int jobs = 1;
    bool long_run = false;  // allows n = 12
    int list_cap = 20;      // per class
    bool distinct = false;
};

/// All graphs with minimum degree >= n/2 - 1; each non-Hamiltonian one must be
/// recognized as a member of one of the extremal families.
VerificationReport characterization_check(const CharacterizationOptions& options);

struct SampleOptions {
    int n = 0;
    int k = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<int> floor;  // default: required_degree(n, k)
    int max_retries = 20000;   // per trial
    int guard = 40;
    int list_cap = 100;
};

/// Random balanced k-partite graphs conditioned (by rejection) on the floor.
/// Trial t uses the edge probability that puts the minimum degree at
/// floor + (t mod 3) about half the time.
VerificationReport sample_verify(const SampleOptions& options);

/// Default F member for every 2 <= k <= k_max, 1 <= m <= m_max with mk >= 3.
VerificationReport tightness_scan(int k_max, int m_max, int solver_limit = 12);

/// Threshold facts, the floor identity and the (n+2)/3 threshold comparison.
VerificationReport facts_report(Int k_max, Int m_max);

// Property scans over ordinary graphs.

struct LemmaScan {
    std::int64_t graphs = 0;
    std::int64_t applicable = 0;
    std::int64_t holds = 0;
    std::int64_t violated = 0;
    std::vector<std::string> violations;  // graph6
};

/// Every labeled graph on n vertices with minimum degree >= ceil((n+2)/3).
LemmaScan domcycle_scan_exhaustive(int n);
/// G(n, p) samples, p chosen so that the degree condition holds about half the time.
LemmaScan domcycle_scan_random(int n, std::int64_t samples, std::uint64_t seed);

struct PairingScan {
    std::int64_t graphs = 0;
    std::int64_t passing = 0;
    std::int64_t hamiltonian = 0;  // among passing
    std::vector<std::string> failures;  // passing but not Hamiltonian
};

/// Random balanced bipartite graphs with n in {4, 6, ..., n_max}; the sorted-degree
/// condition (V = part 1) must imply a Hamiltonian cycle.
PairingScan chvatal_pairing_scan(std::int64_t samples, std::uint64_t seed, int n_max = 14);

}  // namespace kham
