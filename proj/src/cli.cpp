#include "kham/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kham/arithmetic.hpp"
#include "kham/conditions.hpp"
#include "kham/constructions.hpp"
#include "kham/error.hpp"
#include "kham/graph_io.hpp"
#include "kham/harness.hpp"
#include "kham/solver.hpp"

namespace kham {

namespace {

std::string join(const VertexList& vs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
    return out;
}

VertexList parse_list(const std::string& text, const char* what) {
    VertexList out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw InvalidArgument(std::string("empty ") + what);
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct ThresholdArgs {
    Int n = 0, k = 0;
    bool json = false;
};

struct ConstructArgs {
    std::string family;
    int k = 0, m = 0;
    std::string sizes;
    std::vector<std::string> options;
    std::string spec_path;
    std::string format = "g6";
    std::string out_path;
};

struct CheckArgs {
    std::string in;
    bool ham = false, alpha = false, kappa = false, chvatal = false, dominating = false;
    bool longest = false, recognize = false, domcycle = false;
    std::string sides;
    std::string cycle;
};

struct VerifyArgs {
    int n = 0, k = 0;
    std::optional<int> floor;
    bool exhaustive = false;
    std::optional<std::int64_t> sample;
    std::uint64_t seed = 0;
    int shards = 1, shard = 0, jobs = 1;
    std::string out_path;
    bool timing = false, distinct = false;
    int list_cap = 100;
    bool tightness = false;
    int k_max = 0, m_max = 0;
};

struct CharacterizeArgs {
    int n = 0, k = 0;
    std::string out_path;
    bool long_run = false, timing = false, distinct = false;
    int shards = 1, shard = 0, jobs = 1, list_cap = 20;
};

struct FactsArgs {
    Int k_max = 0, m_max = 0;
    std::string out_path;
    bool timing = false;
};

int cmd_threshold(const ThresholdArgs& a, std::ostream& out) {
    const auto p = threshold_profile(a.n, a.k);
    if (a.json) {
        nlohmann::ordered_json j{{"n", p.n},
                                 {"k", p.k},
                                 {"m", p.m},
                                 {"threshold", p.theorem_threshold},
                                 {"cfgjl_bound", to_string(p.cfgjl_bound)},
                                 {"rounding", to_string(p.rounding)},
                                 {"exception", p.is_exception},
                                 {"required_degree", p.required_degree}};
        out << j.dump(2) << "\n";
        return kExitPass;
    }
    out << "n: " << p.n << "\nk: " << p.k << "\nm: " << p.m << "\nthreshold: " << p.theorem_threshold
        << "\ncfgjl_bound: " << to_string(p.cfgjl_bound) << "\nrounding: " << to_string(p.rounding)
        << "\nexception: " << (p.is_exception ? "true" : "false") << "\nrequired_degree: " << p.required_degree
        << "\n";
    return kExitPass;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    std::string text;
    if (!a.spec_path.empty()) {
        if (!a.family.empty() || a.k || a.m || !a.sizes.empty() || !a.options.empty())
            throw InvalidArgument("--spec cannot be combined with --family/--k/--m/--sizes/--options");
        text = read_text(a.spec_path);
    } else {
        if (a.family.empty()) throw InvalidArgument("construct needs --family or --spec");
        text = "family = " + a.family + "\n";
        if (a.k) text += "k = " + std::to_string(a.k) + "\n";
        if (a.m) text += "m = " + std::to_string(a.m) + "\n";
        if (!a.sizes.empty()) text += "sizes = " + a.sizes + "\n";
        for (const auto& o : a.options) {
            if (o.find('=') == std::string::npos) throw InvalidArgument("--options expects key=value, got '" + o + "'");
            text += o + "\n";
        }
    }
    const auto spec = parse_family_spec(text);
    const auto g = build_family(spec);
    const std::string body = a.format == "dot" ? export_dot(g) : encode(g);
    if (a.out_path.empty()) out << body;
    else write_text_file(a.out_path, body);
    return kExitPass;
}

int cmd_check(CheckArgs a, std::ostream& out) {
    const auto g = read_graph_file(a.in);
    if (!(a.ham || a.alpha || a.kappa || a.chvatal || a.dominating || a.longest || a.recognize || a.domcycle))
        a.ham = true;
    if (a.dominating && a.cycle.empty()) throw InvalidArgument("--dominating needs --cycle");
    if (!a.sides.empty() && !a.chvatal) throw InvalidArgument("--sides only applies to --chvatal");
    std::optional<CycleCertificate> cycle;
    if (!a.cycle.empty()) {
        cycle = CycleCertificate{parse_list(a.cycle, "cycle")};
        if (!verify_cycle(g, *cycle)) throw InvalidArgument("--cycle is not a cycle of the graph");
    }
    std::optional<KPartiteGraph> bip;
    if (a.chvatal) {
        if (a.sides.empty()) {
            if (g.part_count() != 2) throw InvalidArgument("--chvatal needs a bipartite input or --sides U/V");
            bip = g;
        } else {
            const auto slash = a.sides.find('/');
            if (slash == std::string::npos) throw InvalidArgument("--sides expects U/V vertex lists, e.g. 0,1/2,3");
            bip = induced_bipartite(g, parse_list(a.sides.substr(0, slash), "U side"),
                                    parse_list(a.sides.substr(slash + 1), "V side"));
        }
    }

    out << "n: " << g.order() << "\nk: " << g.part_count() << "\nedges: " << g.edge_count()
        << "\nmin_degree: " << min_degree(g) << "\n";
    if (a.ham) {
        std::optional<CycleCertificate> found;
        if (g.order() >= 3 && g.order() <= SolverLimits{}.hamiltonian) found = find_hamiltonian_cycle(g);
        if (found) {
            out << "ham: Hamiltonian\ncycle: " << join(found->vertices, " ") << "\n";
        } else {
            const auto w = non_hamiltonicity_witness(g);
            if (!w) throw GuardExceeded("no certificate found and n exceeds the exact search guard");
            out << "ham: non-Hamiltonian\nwitness: " << describe(*w) << "\n";
        }
    }
    if (a.alpha) {
        const auto set = maximum_independent_set(g);
        out << "alpha: " << set.size() << "\nindependent_set: " << join(set) << "\n";
    }
    if (a.kappa) {
        out << "kappa: " << vertex_connectivity(g) << "\n";
        const auto cut = minimum_vertex_cut(g);
        if (!cut.empty()) out << "minimum_cut: " << join(cut) << "\n";
    }
    if (a.chvatal) out << "chvatal: " << (chvatal_bipartite_condition(*bip, 1) ? "true" : "false") << "\n";
    if (a.dominating) out << "strongly_dominating: " << (is_strongly_dominating(g, *cycle) ? "true" : "false") << "\n";
    if (a.longest) {
        const auto c = longest_cycle(g);
        out << "longest_cycle: " << c.length() << "\ncycle: " << join(c.vertices, " ") << "\n";
    }
    if (a.domcycle) {
        const auto r = check_domcycle_lemma(g);
        out << "domcycle_lemma: " << to_string(r.status) << "\n";
        if (r.counter) out << "counter_cycle: " << join(r.counter->vertices, " ") << "\n";
        if (r.status == LemmaStatus::Violated) return kExitFail;
    }
    if (a.recognize) out << "recognize: " << to_string(recognize(g)) << "\n";
    return kExitPass;
}

int finish(const VerificationReport& report, const std::string& out_path, bool timing, std::ostream& out) {
    if (!out_path.empty()) write_text_file(out_path, report.to_text(timing));
    out << "run: " << report.run_kind << "\n";
    for (const auto& [key, value] : report.parameters.items())
        if (!value.is_object()) out << "param." << key << ": " << value.dump() << "\n";
    for (const auto& [name, value] : report.counters) out << name << ": " << value << "\n";
    for (const auto& [name, value] : report.classification_counts) out << "class." << name << ": " << value << "\n";
    out << "counterexamples: " << report.counterexamples.size() << "\n";
    if (!report.exceptional.empty()) out << "exceptional_listed: " << report.exceptional.size() << "\n";
    out << "self_check: " << (report.self_check_ok ? "ok" : "FAILED") << "\n";
    out << "wall_time_seconds: " << report.wall_seconds << "\n";
    out << "status: " << (report.passed() ? "pass" : "fail") << "\n";
    return report.passed() ? kExitPass : kExitFail;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.tightness) {
        if (a.exhaustive || a.sample || a.n || a.k)
            throw InvalidArgument("--tightness takes only --k-max/--m-max");
        if (a.k_max < 2 || a.m_max < 1) throw InvalidArgument("--tightness needs --k-max >= 2 and --m-max >= 1");
        return finish(tightness_scan(a.k_max, a.m_max), a.out_path, a.timing, out);
    }
    if (a.exhaustive == a.sample.has_value()) throw InvalidArgument("choose exactly one of --exhaustive and --sample");
    if (a.sample && (a.shards != 1 || a.shard != 0)) throw InvalidArgument("sharding applies to --exhaustive only");
    validate_nk(a.n, a.k);
    if (a.exhaustive) {
        ExhaustiveOptions o;
        o.n = a.n;
        o.k = a.k;
        o.floor = a.floor;
        o.shard = {a.shard, a.shards};
        o.jobs = a.jobs;
        o.list_cap = a.list_cap;
        o.distinct = a.distinct;
        return finish(exhaustive_verify(o), a.out_path, a.timing, out);
    }
    SampleOptions o;
    o.n = a.n;
    o.k = a.k;
    o.trials = *a.sample;
    o.seed = a.seed;
    o.floor = a.floor;
    o.list_cap = a.list_cap;
    return finish(sample_verify(o), a.out_path, a.timing, out);
}

int cmd_characterize(const CharacterizeArgs& a, std::ostream& out) {
    CharacterizationOptions o;
    o.n = a.n;
    o.k = a.k;
    o.long_run = a.long_run;
    o.shard = {a.shard, a.shards};
    o.jobs = a.jobs;
    o.list_cap = a.list_cap;
    o.distinct = a.distinct;
    return finish(characterization_check(o), a.out_path, a.timing, out);
}

int cmd_facts(const FactsArgs& a, std::ostream& out) {
    return finish(facts_report(a.k_max, a.m_max), a.out_path, a.timing, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree thresholds and Hamiltonicity checks for balanced k-partite graphs", "kham"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kArtifactVersion));

    ThresholdArgs ta;
    auto* threshold = app.add_subcommand("threshold", "Print the degree threshold profile of (n, k)");
    threshold->add_option("--n", ta.n, "Number of vertices")->required();
    threshold->add_option("--k", ta.k, "Number of parts")->required();
    threshold->add_flag("--json", ta.json, "Print JSON instead of key: value lines");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a member of an extremal family");
    construct->add_option("--family", ca.family, "F, F1, F2 or F3")->check(CLI::IsMember({"F", "F1", "F2", "F3"}));
    construct->add_option("--k", ca.k, "Number of parts");
    construct->add_option("--m", ca.m, "Part size (family F)");
    construct->add_option("--sizes", ca.sizes, "Comma-separated independent-set sizes (family F)");
    construct->add_option("--options", ca.options, "Family spec entries as key=value (repeatable)");
    construct->add_option("--spec", ca.spec_path, "Family spec file");
    construct->add_option("--format", ca.format, "g6 (header + graph6) or dot")->check(CLI::IsMember({"g6", "dot"}));
    construct->add_option("--out", ca.out_path, "Write to this path instead of standard output");

    CheckArgs ka;
    auto* check = app.add_subcommand("check", "Run predicates on a graph file");
    check->add_option("--in", ka.in, "Graph file (partition header + graph6, or bare graph6)")->required();
    check->add_flag("--ham", ka.ham, "Hamiltonian cycle or non-Hamiltonicity certificate");
    check->add_flag("--alpha", ka.alpha, "Independence number");
    check->add_flag("--kappa", ka.kappa, "Vertex connectivity");
    check->add_flag("--chvatal", ka.chvatal, "Sorted-degree bipartite condition");
    check->add_option("--sides", ka.sides, "U/V vertex lists for --chvatal, e.g. 0,1,2/3,4,5");
    check->add_flag("--dominating", ka.dominating, "Is --cycle strongly dominating");
    check->add_option("--cycle", ka.cycle, "Comma-separated cycle");
    check->add_flag("--longest", ka.longest, "Longest cycle");
    check->add_flag("--domcycle-lemma", ka.domcycle, "Check that every longest cycle is strongly dominating");
    check->add_flag("--recognize", ka.recognize, "Classify into the extremal families");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Exhaustive, sampled or tightness verification");
    verify->add_option("--n", va.n, "Number of vertices");
    verify->add_option("--k", va.k, "Number of parts");
    verify->add_option("--floor", va.floor, "Minimum degree floor (default: required degree)");
    verify->add_flag("--exhaustive", va.exhaustive, "Enumerate every graph at or above the floor");
    verify->add_option("--sample", va.sample, "Number of random trials");
    verify->add_option("--seed", va.seed, "Random seed");
    verify->add_option("--shards", va.shards, "Shard count")->check(CLI::PositiveNumber);
    verify->add_option("--shard", va.shard, "Shard index")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--out", va.out_path, "JSON report path");
    verify->add_flag("--timing", va.timing, "Include wall time in the report file");
    verify->add_flag("--distinct", va.distinct, "List one graph per isomorphism class");
    verify->add_option("--list-cap", va.list_cap, "Listed graphs per category")->check(CLI::NonNegativeNumber);
    verify->add_flag("--tightness", va.tightness, "Scan the default F members");
    verify->add_option("--k-max", va.k_max, "Largest k for --tightness");
    verify->add_option("--m-max", va.m_max, "Largest m for --tightness");

    CharacterizeArgs ha;
    auto* characterize = app.add_subcommand("characterize", "Classify every non-Hamiltonian graph at degree n/2 - 1");
    characterize->add_option("--n", ha.n, "Number of vertices")->required();
    characterize->add_option("--k", ha.k, "Number of parts")->required();
    characterize->add_option("--out", ha.out_path, "JSON report path");
    characterize->add_flag("--long-run", ha.long_run, "Allow n = 12");
    characterize->add_option("--shards", ha.shards, "Shard count")->check(CLI::PositiveNumber);
    characterize->add_option("--shard", ha.shard, "Shard index")->check(CLI::NonNegativeNumber);
    characterize->add_option("--jobs", ha.jobs, "Worker threads")->check(CLI::PositiveNumber);
    characterize->add_option("--list-cap", ha.list_cap, "Listed graphs per class")->check(CLI::NonNegativeNumber);
    characterize->add_flag("--distinct", ha.distinct, "List one graph per isomorphism class");
    characterize->add_flag("--timing", ha.timing, "Include wall time in the report file");

    FactsArgs fa;
    auto* facts = app.add_subcommand("facts", "Scan the numerical facts behind the threshold");
    facts->add_option("--k-max", fa.k_max, "Largest k")->required()->check(CLI::PositiveNumber);
    facts->add_option("--m-max", fa.m_max, "Largest m")->required()->check(CLI::PositiveNumber);
    facts->add_option("--out", fa.out_path, "JSON report path");
    facts->add_flag("--timing", fa.timing, "Include wall time in the report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForVersion&) {
        out << kArtifactVersion << "\n";
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (threshold->parsed()) return cmd_threshold(ta, out);
        if (construct->parsed()) return cmd_construct(ca, out);
        if (check->parsed()) return cmd_check(ka, out);
        if (verify->parsed()) return cmd_verify(va, out);
        if (characterize->parsed()) return cmd_characterize(ha, out);
        if (facts->parsed()) return cmd_facts(fa, out);
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace kham
