#include "doctest.h"

#include <set>

#include "kham/constructions.hpp"
#include "kham/error.hpp"
#include "kham/graph_io.hpp"
#include "kham/harness.hpp"
#include "kham/isomorphism.hpp"
#include "oracles.hpp"

using namespace kham;

namespace {

std::set<std::string> graphs_of(const std::vector<GraphRecord>& records) {
    std::set<std::string> out;
    for (const auto& r : records) out.insert(r.graph);
    return out;
}

ExhaustiveOptions exhaustive(int n, int k, int floor) {
    ExhaustiveOptions o;
    o.n = n;
    o.k = k;
    o.floor = floor;
    o.list_cap = 1 << 20;
    return o;
}

}  // namespace

TEST_CASE("enumerator matches the edge-subset census") {
    struct Case {
        int n, k, floor;
    };
    for (const auto c : {Case{6, 3, 3}, Case{6, 3, 2}, Case{6, 2, 2}, Case{6, 6, 3}, Case{8, 2, 2}, Case{8, 2, 3}}) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        CAPTURE(c.floor);
        const auto expected = oracle::census_by_subsets(c.n, c.k, c.floor);
        const auto report = exhaustive_verify(exhaustive(c.n, c.k, c.floor));
        CHECK(report.counters.at("graphs_meeting_floor") == expected.meeting_floor);
        CHECK(report.counters.at("non_hamiltonian") == expected.non_hamiltonian);
        CHECK(report.self_check_ok);
    }
}

TEST_CASE("assert mode at the required degree") {
    const auto r63 = exhaustive_verify(exhaustive(6, 3, 3));
    CHECK(r63.passed());
    CHECK(r63.counters.at("graphs_meeting_floor") == 51);
    CHECK(r63.counters.at("non_hamiltonian") == 0);

    ExhaustiveOptions o;
    o.n = 8;
    o.k = 2;
    const auto r82 = exhaustive_verify(o);  // floor defaults to the required degree 3
    CHECK(r82.passed());
    CHECK(r82.parameters.at("degree_floor") == 3);

    const auto below = exhaustive_verify(exhaustive(8, 2, 2));
    CHECK(below.passed());  // list mode: exceptions are expected
    CHECK(below.exceptional.size() == 750);
    CHECK(below.counterexamples.empty());
}

TEST_CASE("(8,4) characterization") {
    const auto r = characterization_check({});
    CHECK(r.passed());
    CHECK(r.counters.at("non_hamiltonian") == 2312);
    CHECK(r.classification_counts.at("InF1") == 744);
    CHECK(r.classification_counts.at("IsoF2") == 32);
    CHECK(r.classification_counts.at("InF3") == 1536);
    CHECK(r.classification_counts.at("None") == 0);
}

TEST_CASE("shards and jobs partition the search") {
    const auto whole = exhaustive_verify(exhaustive(8, 2, 2));
    for (int count : {2, 3, 7}) {
        std::vector<VerificationReport> parts;
        for (int i = 0; i < count; ++i) {
            auto o = exhaustive(8, 2, 2);
            o.shard = {i, count};
            parts.push_back(exhaustive_verify(o));
        }
        const auto merged = merge_reports(parts);
        CHECK(merged.counters == whole.counters);
        CHECK(graphs_of(merged.exceptional) == graphs_of(whole.exceptional));
        CHECK(merged.exceptional.size() == whole.exceptional.size());
    }
    auto threaded = exhaustive(8, 2, 2);
    threaded.jobs = 4;
    const auto t = exhaustive_verify(threaded);
    CHECK(t.counters == whole.counters);
    CHECK(graphs_of(t.exceptional) == graphs_of(whole.exceptional));

    std::int64_t visited = 0;
    for (int i = 0; i < 5; ++i) visited += for_each_kpartite_graph(6, 3, 2, {i, 5}, [](const SmallGraph&) {});
    CHECK(visited == for_each_kpartite_graph(6, 3, 2, {}, [](const SmallGraph&) {}));
}

TEST_CASE("reports are byte-identical across runs") {
    auto o = exhaustive(8, 2, 2);
    o.list_cap = 50;
    o.jobs = 3;
    CHECK(exhaustive_verify(o).to_json().dump() == exhaustive_verify(o).to_json().dump());
    CHECK(characterization_check({}).to_json().dump(2) == characterization_check({}).to_json().dump(2));
}

TEST_CASE("distinct listing") {
    auto o = exhaustive(8, 2, 2);
    o.distinct = true;
    const auto r = exhaustive_verify(o);
    CHECK(r.counters.at("non_hamiltonian") == 750);
    CHECK(r.exceptional.size() < 750);
    std::set<std::string> forms;
    for (const auto& rec : r.exceptional) forms.insert(canonical_form(decode(rec.graph)));
    CHECK(forms.size() == r.exceptional.size());
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(exhaustive_verify(exhaustive(10, 2, 3)), GuardExceeded);
    CHECK_THROWS_AS(exhaustive_verify(exhaustive(8, 3, 3)), InvalidArgument);
    auto bad = exhaustive(6, 3, 3);
    bad.shard = {3, 3};
    CHECK_THROWS_AS(exhaustive_verify(bad), InvalidArgument);
    bad.shard = {0, 1};
    bad.jobs = 0;
    CHECK_THROWS_AS(exhaustive_verify(bad), InvalidArgument);
    CharacterizationOptions c;
    c.n = 12;
    c.k = 6;
    CHECK_THROWS_AS(characterization_check(c), GuardExceeded);
}

TEST_CASE("sampling") {
    SampleOptions o;
    o.n = 12;
    o.k = 4;
    o.trials = 300;
    o.seed = 7;
    const auto a = sample_verify(o);
    CHECK(a.passed());
    CHECK(a.counters.at("graphs_meeting_floor") == 300);
    CHECK(a.counters.at("non_hamiltonian") == 0);
    CHECK(a.to_json().dump() == sample_verify(o).to_json().dump());
    o.seed = 8;
    CHECK(a.to_json().dump() != sample_verify(o).to_json().dump());

    SampleOptions e;
    e.n = 16;
    e.k = 8;
    e.trials = 200;
    e.seed = 9;
    CHECK(sample_verify(e).passed());
    e.floor = 7;
    const auto below = sample_verify(e);
    CHECK(below.passed());
    CHECK(below.counterexamples.empty());

    e.n = 48;
    e.k = 4;
    e.floor.reset();
    CHECK_THROWS_AS(sample_verify(e), GuardExceeded);
}

TEST_CASE("tightness and facts") {
    const auto t = tightness_scan(100, 5);
    CHECK(t.passed());
    CHECK(t.counters.at("members") == t.counters.at("certificates_valid"));
    CHECK(t.counters.at("members") == t.counters.at("min_degree_exact"));
    CHECK(t.counters.at("solver_confirmed") > 0);

    const auto f = facts_report(60, 20);
    CHECK(f.passed());
    for (const auto& [name, value] : f.counters)
        if (name.ends_with(".violated")) CHECK_MESSAGE(value == 0, name);
    CHECK(f.counters.at("domcycle_threshold.false") == 1);
    CHECK(f.exceptional.size() == 1);
}

TEST_CASE("lemma and pairing scans") {
    const auto scan = domcycle_scan_random(9, 2000, 5);
    CHECK(scan.violated == 0);
    CHECK(scan.applicable > 0);
    const auto pairing = chvatal_pairing_scan(3000, 6, 10);
    CHECK(pairing.failures.empty());
    CHECK(pairing.passing == pairing.hamiltonian);
    CHECK(pairing.passing > 0);
}
