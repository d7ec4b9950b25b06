#include "kham/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "kham/conditions.hpp"
#include "kham/constructions.hpp"
#include "kham/error.hpp"
#include "kham/graph_io.hpp"
#include "kham/isomorphism.hpp"
#include "kham/random.hpp"
#include "kham/solver.hpp"

namespace kham {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Enumerator {
public:
    Enumerator(int n, int k, int floor, Shard shard, const std::function<void(const SmallGraph&)>& visit)
        : n_(n), floor_(floor), shard_(shard), visit_(visit) {
        const auto part_of = block_partition(n, k);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part_of[u] != part_of[v]) {
                    pairs_.emplace_back(u, v);
                    ++left_[u];
                    ++left_[v];
                }
        prefix_bits_ = std::min<int>(kShardPrefixBits, static_cast<int>(pairs_.size()));
        g_.n = n;
    }

    std::int64_t run() {
        for (int v = 0; v < n_; ++v)
            if (left_[v] < floor_) return 0;
        dfs(0, 0);
        return visited_;
    }

private:
    void dfs(std::size_t i, std::uint32_t prefix) {
        if (static_cast<int>(i) == prefix_bits_ && static_cast<int>(prefix % static_cast<std::uint32_t>(shard_.count)) != shard_.index)
            return;
        if (i == pairs_.size()) {
            ++visited_;
            visit_(g_);
            return;
        }
        const auto [u, v] = pairs_[i];
        --left_[u];
        --left_[v];
        const bool in_prefix = static_cast<int>(i) < prefix_bits_;
        g_.add_edge(u, v);
        ++deg_[u];
        ++deg_[v];
        dfs(i + 1, in_prefix ? prefix | (1U << i) : prefix);
        g_.remove_edge(u, v);
        --deg_[u];
        --deg_[v];
        if (deg_[u] + left_[u] >= floor_ && deg_[v] + left_[v] >= floor_) dfs(i + 1, prefix);
        ++left_[u];
        ++left_[v];
    }

    int n_;
    int floor_;
    Shard shard_;
    const std::function<void(const SmallGraph&)>& visit_;
    std::vector<Edge> pairs_;
    int prefix_bits_ = 0;
    std::array<int, kMaxSmallOrder> left_{};
    std::array<int, kMaxSmallOrder> deg_{};
    SmallGraph g_;
    std::int64_t visited_ = 0;
};

void check_shard(const Shard& s, int jobs) {
    if (s.count < 1 || s.index < 0 || s.index >= s.count) throw InvalidArgument("shard index must be in [0, count)");
    if (jobs < 1) throw InvalidArgument("jobs must be >= 1");
    if (static_cast<std::int64_t>(s.count) * jobs > (std::int64_t{1} << kShardPrefixBits))
        throw InvalidArgument("shard count times jobs exceeds 2^" + std::to_string(kShardPrefixBits));
}

// What happens to a non-Hamiltonian graph in an enumeration run.
enum class Mode { Assert, List, Classify };

struct RunConfig {
    int n = 0;
    int k = 0;
    int floor = 0;
    Mode mode = Mode::Assert;
    int list_cap = 0;
    bool distinct = false;
};

std::string witness_text(const KPartiteGraph& g, std::optional<NonHamWitness>* out) {
    WitnessOptions opts;
    opts.search_guard = kMaxSmallOrder;
    auto w = non_hamiltonicity_witness(g, opts);
    if (out) *out = w;
    return w ? describe(*w) : "no certificate";
}

// Re-decode the stored text, re-solve, and re-check the certificate.
bool self_check(const GraphRecord& record, const std::optional<NonHamWitness>& witness) {
    try {
        const auto g = decode(record.graph);
        const auto parts = g.part_masks();
        if (search_hamiltonian_cycle(g.small(), parts).found) return false;
        if (witness && !check_witness(g, *witness)) return false;
        if (record.classification && to_string(recognize(g)) != *record.classification) return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

class EnumerationRun {
public:
    explicit EnumerationRun(const RunConfig& config) : config_(config), partition_(block_partition(config.n, config.k)) {
        part_masks_.assign(static_cast<std::size_t>(config.k), 0);
        for (int v = 0; v < config.n; ++v) part_masks_[partition_[v]] |= bit(v);
    }

    VerificationReport run(Shard shard) {
        const std::function<void(const SmallGraph&)> visit = [this](const SmallGraph& g) { on_graph(g); };
        Enumerator(config_.n, config_.k, config_.floor, shard, visit).run();
        report_.counters["graphs_meeting_floor"] = meeting_;
        report_.counters["hamiltonian"] = hamiltonian_;
        report_.counters["non_hamiltonian"] = non_hamiltonian_;
        report_.counters["witnesses_found"] = witnesses_;
        return std::move(report_);
    }

private:
    void on_graph(const SmallGraph& s) {
        ++meeting_;
        if (search_hamiltonian_cycle(s, part_masks_).found) {
            ++hamiltonian_;
            return;
        }
        ++non_hamiltonian_;
        const auto g = with_partition(s, config_.k, partition_);
        std::optional<std::string> cls;
        if (config_.mode == Mode::Classify) {
            cls = to_string(recognize(g));
            ++report_.classification_counts[*cls];
        }
        const bool violation = config_.mode == Mode::Assert || (cls && *cls == "None");
        auto& list = violation ? report_.counterexamples : report_.exceptional;
        const std::string bucket = violation ? "!" : cls.value_or("");
        if (listed_[bucket] >= config_.list_cap) return;
        if (config_.distinct) {
            if (!seen_.insert(bucket + canonical_form(g, true)).second) return;
        }
        ++listed_[bucket];
        std::optional<NonHamWitness> w;
        GraphRecord record{encode(g), "non-Hamiltonian", witness_text(g, &w), cls};
        if (w) ++witnesses_;
        ++report_.records_checked;
        if (!self_check(record, w)) report_.self_check_ok = false;
        list.push_back(std::move(record));
    }

    RunConfig config_;
    std::vector<int> partition_;
    std::vector<Mask> part_masks_;
    VerificationReport report_;
    std::int64_t meeting_ = 0, hamiltonian_ = 0, non_hamiltonian_ = 0, witnesses_ = 0;
    std::map<std::string, int> listed_;
    std::set<std::string> seen_;
};

VerificationReport run_enumeration(const RunConfig& config, Shard shard, int jobs) {
    check_shard(shard, jobs);
    std::vector<VerificationReport> parts(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        parts[0] = EnumerationRun(config).run(shard);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&, j] {
                try {
                    parts[j] = EnumerationRun(config).run({shard.index + shard.count * j, shard.count * jobs});
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            });
        for (auto& w : workers) w.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    auto merged = merge_reports(parts);
    if (config.distinct) {
        std::set<std::string> seen;
        auto dedupe = [&](std::vector<GraphRecord>& list, const char* tag) {
            std::vector<GraphRecord> kept;
            for (auto& r : list)
                if (seen.insert(tag + canonical_form(decode(r.graph), true)).second) kept.push_back(std::move(r));
            list = std::move(kept);
        };
        dedupe(merged.exceptional, "e");
        dedupe(merged.counterexamples, "c");
    }
    // Caps apply per worker; re-apply them to the merged listing.
    std::map<std::string, int> listed;
    auto cap = [&](std::vector<GraphRecord>& list) {
        std::vector<GraphRecord> kept;
        for (auto& r : list)
            if (listed[r.classification.value_or("") + (&list == &merged.counterexamples ? "!" : "")]++ < config.list_cap)
                kept.push_back(std::move(r));
        list = std::move(kept);
    };
    cap(merged.exceptional);
    cap(merged.counterexamples);
    return merged;
}

nlohmann::ordered_json shard_json(const Shard& s, int jobs) {
    return {{"index", s.index}, {"count", s.count}, {"prefix_bits", kShardPrefixBits}, {"jobs", jobs}};
}

std::int64_t cross_pairs(int n, int k) { return static_cast<std::int64_t>(n) * (n - n / k) / 2; }

}  // namespace

std::int64_t for_each_kpartite_graph(int n, int k, int floor, Shard shard,
                                     const std::function<void(const SmallGraph&)>& visit) {
    if (n < 1 || n > kMaxSmallOrder || k < 1 || n % k != 0) throw InvalidArgument("need k | n and n <= 64");
    check_shard(shard, 1);
    return Enumerator(n, k, floor, shard, visit).run();
}

VerificationReport exhaustive_verify(const ExhaustiveOptions& o) {
    validate_nk(o.n, o.k);
    if (o.n > o.guard) throw GuardExceeded("exhaustive verification limited to n <= " + std::to_string(o.guard));
    if (o.distinct && o.n > kCanonicalGuard)
        throw GuardExceeded("distinct listing limited to n <= " + std::to_string(kCanonicalGuard));
    const auto start = Clock::now();
    const int required = static_cast<int>(required_degree(o.n, o.k));
    RunConfig config;
    config.n = o.n;
    config.k = o.k;
    config.floor = o.floor.value_or(required);
    if (config.floor < 0) throw InvalidArgument("degree floor must be nonnegative");
    const bool regime = o.n == 2 * o.k && o.n % 4 == 0;
    config.mode = config.floor >= required ? Mode::Assert : (regime ? Mode::Classify : Mode::List);
    config.list_cap = o.list_cap;
    config.distinct = o.distinct;

    auto report = run_enumeration(config, o.shard, o.jobs);
    report.run_kind = "exhaustive";
    report.parameters = {{"n", o.n},
                         {"k", o.k},
                         {"degree_floor", config.floor},
                         {"theorem_threshold", theorem_threshold(o.n, o.k)},
                         {"required_degree", required},
                         {"asserts_hamiltonian", config.mode == Mode::Assert},
                         {"cross_pairs", cross_pairs(o.n, o.k)},
                         {"shard", shard_json(o.shard, o.jobs)}};
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport characterization_check(const CharacterizationOptions& o) {
    validate_nk(o.n, o.k);
    if (o.n != 2 * o.k || o.n % 4 != 0) throw InvalidArgument("characterization needs n = 2k with 4 | n");
    const int limit = o.long_run ? 12 : 8;
    if (o.n > limit)
        throw GuardExceeded("characterization limited to n <= " + std::to_string(limit) +
                            (o.long_run ? "" : " (n = 12 needs the long-run flag)"));
    const auto start = Clock::now();
    RunConfig config;
    config.n = o.n;
    config.k = o.k;
    config.floor = o.n / 2 - 1;
    config.mode = Mode::Classify;
    config.list_cap = o.list_cap;
    config.distinct = o.distinct;
    auto report = run_enumeration(config, o.shard, o.jobs);
    for (const char* name : {"InF1", "IsoF2", "InF3", "None"}) report.classification_counts.try_emplace(name, 0);
    report.run_kind = "characterization";
    report.parameters = {{"n", o.n},
                         {"k", o.k},
                         {"degree_floor", config.floor},
                         {"cross_pairs", cross_pairs(o.n, o.k)},
                         {"shard", shard_json(o.shard, o.jobs)}};
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport sample_verify(const SampleOptions& o) {
    validate_nk(o.n, o.k);
    if (o.n > o.guard || o.n > kMaxSmallOrder)
        throw GuardExceeded("sampling limited to the solver guard n <= " + std::to_string(o.guard));
    if (o.trials < 0) throw InvalidArgument("trials must be nonnegative");
    const auto start = Clock::now();
    const int n = o.n, k = o.k, m = n / k;
    const int required = static_cast<int>(required_degree(n, k));
    const int floor = o.floor.value_or(required);
    const bool asserting = floor >= required;
    const bool regime = n == 2 * k && n % 4 == 0 && n <= kRecognizeGuard;
    if (floor > n - m) throw InvalidArgument("degree floor exceeds n - n/k; no graph qualifies");

    // Probabilities rounded to 1e-6 so the report and the draws do not depend on libm digits.
    std::vector<double> grid;
    for (int off = 0; off < 3; ++off) {
        const int target = std::min(floor + off, n - m);
        const double p = probability_for_min_degree(n, n - m, target);
        grid.push_back(std::round(p * 1e6) / 1e6);
    }

    Rng rng(o.seed);
    const auto partition = block_partition(n, k);
    std::vector<Mask> parts(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) parts[partition[v]] |= bit(v);
    VerificationReport report;
    std::int64_t drawn = 0, accepted = 0, ham = 0, non_ham = 0, abandoned = 0, witnesses = 0;
    for (std::int64_t t = 0; t < o.trials; ++t) {
        const auto threshold = probability_threshold(grid[static_cast<std::size_t>(t % 3)]);
        std::optional<SmallGraph> g;
        for (int attempt = 0; attempt < o.max_retries && !g; ++attempt) {
            ++drawn;
            auto candidate = random_kpartite(n, k, threshold, rng);
            if (candidate.min_degree() >= floor) g = candidate;
        }
        if (!g) {
            ++abandoned;
            continue;
        }
        ++accepted;
        if (search_hamiltonian_cycle(*g, parts).found) {
            ++ham;
            continue;
        }
        ++non_ham;
        const auto kg = with_partition(*g, k, partition);
        std::optional<std::string> cls;
        if (regime) {
            cls = to_string(recognize(kg));
            ++report.classification_counts[*cls];
        }
        const bool violation = asserting || (cls && *cls == "None");
        auto& list = violation ? report.counterexamples : report.exceptional;
        if (static_cast<int>(list.size()) >= o.list_cap && !violation) continue;
        std::optional<NonHamWitness> w;
        GraphRecord record{encode(kg), "non-Hamiltonian", witness_text(kg, &w), cls};
        if (w) ++witnesses;
        ++report.records_checked;
        if (!self_check(record, w)) report.self_check_ok = false;
        list.push_back(std::move(record));
    }
    report.run_kind = "sample";
    report.counters = {{"graphs_drawn", drawn},          {"graphs_meeting_floor", accepted},
                       {"hamiltonian", ham},             {"non_hamiltonian", non_ham},
                       {"abandoned_trials", abandoned},  {"witnesses_found", witnesses}};
    report.incomplete = abandoned > 0;
    report.parameters = {{"n", n},
                         {"k", k},
                         {"degree_floor", floor},
                         {"required_degree", required},
                         {"asserts_hamiltonian", asserting},
                         {"trials", o.trials},
                         {"seed", o.seed},
                         {"max_retries", o.max_retries},
                         {"edge_probabilities", grid}};
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport tightness_scan(int k_max, int m_max, int solver_limit) {
    if (k_max < 2 || m_max < 1) throw InvalidArgument("tightness scan needs k_max >= 2 and m_max >= 1");
    const auto start = Clock::now();
    VerificationReport report;
    std::int64_t members = 0, degree_exact = 0, certificates = 0, solver_confirmed = 0;
    for (int k = 2; k <= k_max; ++k)
        for (int m = 1; m <= m_max; ++m) {
            const int n = k * m;
            if (n < 3) continue;
            const std::string where = "k=" + std::to_string(k) + " m=" + std::to_string(m);
            FamilySpec spec;
            spec.family = Family::F;
            spec.k = k;
            spec.m = m;
            KPartiteGraph g;
            try {
                g = build_family(spec);
            } catch (const InvalidArgument& e) {
                report.counterexamples.push_back({where, "infeasible default sizes", e.what(), std::nullopt});
                continue;
            }
            ++members;
            const auto d = theorem_threshold(n, k);
            const int delta = min_degree(g);
            const IndependentSetTooLarge cert{designated_independent_set(spec)};
            const bool cert_ok = static_cast<int>(cert.set.size()) == (n + 2) / 2 && check_witness(g, cert);
            bool solver_ok = true;
            if (n <= solver_limit) {
                solver_ok = !search_hamiltonian_cycle(g.small(), g.part_masks()).found;
                solver_confirmed += solver_ok;
            }
            degree_exact += delta == d - 1;
            certificates += cert_ok;
            if (delta != d - 1 || !cert_ok || !solver_ok) {
                std::string detail = where + ": min degree " + std::to_string(delta) + " vs threshold " +
                                     std::to_string(d) + ", certificate " + (cert_ok ? "valid" : "invalid") +
                                     ", solver " + (solver_ok ? "agrees" : "found a Hamiltonian cycle");
                report.counterexamples.push_back({n <= 64 ? encode(g) : where, "tightness failure", detail, std::nullopt});
            }
        }
    report.run_kind = "tightness";
    report.counters = {{"members", members},
                       {"min_degree_exact", degree_exact},
                       {"certificates_valid", certificates},
                       {"solver_confirmed", solver_confirmed}};
    report.parameters = {{"k_max", k_max}, {"m_max", m_max}, {"solver_limit", solver_limit}};
    report.wall_seconds = seconds_since(start);
    return report;
}

VerificationReport facts_report(Int k_max, Int m_max) {
    if (k_max < 2 || m_max < 1) throw InvalidArgument("facts scan needs k_max >= 2 and m_max >= 1");
    const auto start = Clock::now();
    VerificationReport report;
    const auto facts = check_threshold_facts(k_max, m_max);
    for (const auto& t : facts.tallies) {
        report.counters[t.fact + ".evaluated"] = t.evaluated;
        report.counters[t.fact + ".violated"] = t.violated;
    }
    for (const auto& v : facts.violations)
        report.counterexamples.push_back(
            {"n=" + std::to_string(v.n) + " k=" + std::to_string(v.k), v.fact, v.detail, std::nullopt});

    const auto eq4 = scan_eq4_identity(k_max, m_max);
    report.counters["floor_identity.evaluated"] = eq4.evaluated;
    report.counters["floor_identity.violated"] = static_cast<std::int64_t>(eq4.failures.size());
    for (const auto& [n, k] : eq4.failures)
        report.counterexamples.push_back(
            {"n=" + std::to_string(n) + " k=" + std::to_string(k), "floor_identity", "identity fails", std::nullopt});

    const auto dom = scan_domcycle_threshold(k_max, m_max);
    report.counters["domcycle_threshold.evaluated"] = dom.evaluated;
    report.counters["domcycle_threshold.false"] = static_cast<std::int64_t>(dom.failures.size());
    for (const auto& [n, k] : dom.failures) {
        GraphRecord r{"n=" + std::to_string(n) + " k=" + std::to_string(k), "domcycle_threshold",
                      "threshold below (n+2)/3", std::nullopt};
        // (8,4) is the single expected exception; anything else is a failure.
        (n == 8 && k == 4 ? report.exceptional : report.counterexamples).push_back(std::move(r));
    }
    report.run_kind = "facts";
    report.parameters = {{"k_max", k_max}, {"m_max", m_max}};
    report.wall_seconds = seconds_since(start);
    return report;
}

LemmaScan domcycle_scan_exhaustive(int n) {
    if (n < 3 || n > 8) throw GuardExceeded("exhaustive lemma scan limited to 3 <= n <= 8");
    LemmaScan scan;
    const int floor = (n + 2 + 2) / 3;
    for_each_kpartite_graph(n, n, floor, {}, [&](const SmallGraph& g) {
        ++scan.graphs;
        const auto r = check_domcycle_lemma(g);
        if (r.status == LemmaStatus::NotApplicable) return;
        ++scan.applicable;
        if (r.status == LemmaStatus::Holds) ++scan.holds;
        else {
            ++scan.violated;
            scan.violations.push_back(to_graph6(as_n_partite(g)));
        }
    });
    return scan;
}

LemmaScan domcycle_scan_random(int n, std::int64_t samples, std::uint64_t seed) {
    if (n < 3 || n > kDomCycleGuard) throw GuardExceeded("random lemma scan limited to n <= 14");
    const int floor = (n + 2 + 2) / 3;
    const double p = std::round(probability_for_min_degree(n, n - 1, floor) * 1e6) / 1e6;
    const auto threshold = probability_threshold(p);
    Rng rng(seed);
    LemmaScan scan;
    for (std::int64_t i = 0; i < samples; ++i) {
        const auto g = random_graph(n, threshold, rng);
        ++scan.graphs;
        const auto r = check_domcycle_lemma(g);
        if (r.status == LemmaStatus::NotApplicable) continue;
        ++scan.applicable;
        if (r.status == LemmaStatus::Holds) ++scan.holds;
        else {
            ++scan.violated;
            scan.violations.push_back(to_graph6(as_n_partite(g)));
        }
    }
    return scan;
}

PairingScan chvatal_pairing_scan(std::int64_t samples, std::uint64_t seed, int n_max) {
    if (n_max < 4 || n_max > kMaxSmallOrder) throw InvalidArgument("pairing scan needs 4 <= n_max <= 64");
    static constexpr double kDensities[] = {0.5, 0.6, 0.7, 0.8, 0.9};
    Rng rng(seed);
    PairingScan scan;
    for (std::int64_t i = 0; i < samples; ++i) {
        const int n = 2 * rng.between(2, n_max / 2);
        const auto threshold = probability_threshold(kDensities[rng.below(std::size(kDensities))]);
        const auto s = random_kpartite(n, 2, threshold, rng);
        const auto h = with_partition(s, 2, block_partition(n, 2));
        ++scan.graphs;
        if (!chvatal_bipartite_condition(h, 1)) continue;
        ++scan.passing;
        if (search_hamiltonian_cycle(s, h.part_masks()).found) ++scan.hamiltonian;
        else scan.failures.push_back(encode(h));
    }
    return scan;
}

}  // namespace kham
