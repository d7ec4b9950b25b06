#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kham/graph.hpp"

namespace kham {

/// A cycle listed as distinct vertices; consecutive entries (and last -> first) are adjacent.
struct CycleCertificate {
    std::vector<int> vertices;

    std::size_t length() const { return vertices.size(); }
    bool operator==(const CycleCertificate&) const = default;
};

/// Size guards, all configurable. Defaults keep every exact search interactive.
struct SolverLimits {
    int hamiltonian = 40;
    int longest_cycle = 20;
    int enumerate_cycles = 14;
};

bool verify_cycle(const KPartiteGraph& g, const CycleCertificate& cycle);

/// Outcome of the mask-level Hamiltonian search.
struct HamiltonSearchResult {
    bool found = false;
    std::vector<int> cycle;
    std::uint64_t nodes = 0;
};

/// Depth-first path extension from a minimum-degree vertex, fail-first ordering,
/// ties by vertex id. Prunes on: a remaining vertex with fewer than two usable
/// neighbours, the remaining vertices not reachable from the path end, and
/// independent unions of (one or two) parts too large to interleave.
/// `parts` may be empty when no partition is known. Requires n <= 64.
HamiltonSearchResult search_hamiltonian_cycle(const SmallGraph& g, std::span<const Mask> parts = {});

std::optional<CycleCertificate> find_hamiltonian_cycle(const KPartiteGraph& g, const SolverLimits& limits = {});

/// Longest cycle of a graph with n <= 64 (no guard); length 0 when acyclic.
std::vector<int> longest_cycle(const SmallGraph& g);
/// Every longest cycle once, as its rotation starting at the smallest vertex with
/// the smaller neighbour second.
std::vector<std::vector<int>> enumerate_longest_cycles(const SmallGraph& g);

/// Branch-and-bound over path extensions with the incumbent length as bound.
/// Throws InvalidArgument for acyclic graphs.
CycleCertificate longest_cycle(const KPartiteGraph& g, const SolverLimits& limits = {});
std::vector<CycleCertificate> enumerate_longest_cycles(const KPartiteGraph& g, const SolverLimits& limits = {});

// Non-Hamiltonicity certificates.

/// An independent set larger than n/2.
struct IndependentSetTooLarge {
    VertexList set;
};
/// Removing `cut` leaves more than |cut| components (|cut| <= 1 covers disconnected
/// graphs and cut vertices).
struct SmallCut {
    VertexList cut;
    int components = 0;
};
/// `side_a` is independent with exactly n/2 vertices, so a Hamiltonian cycle must
/// alternate sides; `vertex` lies outside A and has at most one neighbour in A.
struct BipartiteDegreeOne {
    VertexList side_a;
    int vertex = -1;
};
/// The exact search exhausted its tree.
struct ExhaustiveSearch {
    std::uint64_t nodes = 0;
};

using NonHamWitness = std::variant<IndependentSetTooLarge, SmallCut, BipartiteDegreeOne, ExhaustiveSearch>;

std::string witness_kind(const NonHamWitness& w);
std::string describe(const NonHamWitness& w);

struct WitnessOptions {
    /// A designated independent set (e.g. from a family constructor) to try first.
    std::optional<VertexList> independent_hint;
    /// Exact independence number / part-union searches only up to this order.
    int exact_guard = 64;
    /// Exhaustive search fallback only up to this order.
    int search_guard = 40;
};

/// Tries, in order: a cut of size <= 1, an independent set > n/2, an independent
/// half with a degree-<=1 vertex opposite, a 2-vertex cut leaving 3+ components, and
/// finally exhaustive search. Returns nullopt when g is Hamiltonian or when no
/// certificate was found within the guards.
std::optional<NonHamWitness> non_hamiltonicity_witness(const KPartiteGraph& g, const WitnessOptions& options = {});

/// Independent polynomial check of the cheap certificates; ExhaustiveSearch is
/// re-checked by running the search again (n <= 64).
bool check_witness(const KPartiteGraph& g, const NonHamWitness& w);

/// A cut of size <= 1 if one exists (empty vector when disconnected), via low-link DFS.
std::optional<VertexList> small_vertex_cut(const KPartiteGraph& g);

}  // namespace kham
