#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kham/cli.hpp"
#include "kham/constructions.hpp"
#include "kham/graph_io.hpp"

using namespace kham;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "kham");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "kham_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("threshold") {
    const auto r = run({"threshold", "--n", "8", "--k", "4"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("threshold: 3\n") != std::string::npos);
    CHECK(r.out.find("cfgjl_bound: 10/3\n") != std::string::npos);
    CHECK(r.out.find("exception: true\n") != std::string::npos);
    CHECK(r.out.find("required_degree: 4\n") != std::string::npos);

    const auto j = nlohmann::json::parse(run({"threshold", "--n", "12", "--k", "3", "--json"}).out);
    CHECK(j.at("threshold") == 5);
    CHECK(j.at("exception") == false);

    CHECK(run({"threshold", "--n", "7", "--k", "2"}).code == kExitInvalid);
    CHECK(run({"threshold", "--n", "8"}).code == kExitInvalid);
    CHECK(run({"threshold", "--n", "eight", "--k", "4"}).code == kExitInvalid);
    CHECK(run({}).code == kExitInvalid);
    CHECK(run({"frobnicate"}).code == kExitInvalid);
}

TEST_CASE("construct and check") {
    const auto g6 = run({"construct", "--family", "F2"});
    CHECK(g6.code == kExitPass);
    CHECK(g6.out == encode(build_F2()));

    const auto dot = run({"construct", "--family", "F", "--k", "4", "--m", "2", "--format", "dot"});
    CHECK(dot.code == kExitPass);
    CHECK(dot.out.rfind("graph", 0) == 0);

    const auto sized = run({"construct", "--family", "F", "--k", "4", "--m", "2", "--sizes", "2,2"});
    CHECK(sized.code == kExitInvalid);
    CHECK(sized.err.find("entries") != std::string::npos);

    const auto file = scratch("f2.txt");
    CHECK(run({"construct", "--family", "F2", "--out", file.string()}).code == kExitPass);
    const auto ham = run({"check", "--in", file.string()});
    CHECK(ham.code == kExitPass);
    CHECK(ham.out.find("ham: non-Hamiltonian") != std::string::npos);
    CHECK(ham.out.find("witness: SmallCut") != std::string::npos);

    const auto more = run({"check", "--in", file.string(), "--alpha", "--kappa", "--recognize", "--domcycle-lemma"});
    CHECK(more.code == kExitPass);
    CHECK(more.out.find("kappa: 2\n") != std::string::npos);
    CHECK(more.out.find("recognize: IsoF2\n") != std::string::npos);
    CHECK(more.out.find("domcycle_lemma: NotApplicable\n") != std::string::npos);

    const auto dom = run({"check", "--in", file.string(), "--dominating", "--cycle", "0,2,6,1,4,7"});
    CHECK(dom.out.find("strongly_dominating: false\n") != std::string::npos);

    const auto spec = scratch("f3.spec");
    std::ofstream(spec) << "family = F3\nk = 4\ny_prime = 7\n";
    const auto f3 = scratch("f3.txt");
    CHECK(run({"construct", "--spec", spec.string(), "--out", f3.string()}).code == kExitPass);
    const auto rec = run({"check", "--in", f3.string(), "--recognize", "--ham"});
    CHECK(rec.out.find("recognize: InF3\n") != std::string::npos);
    CHECK(rec.out.find("witness: BipartiteDegreeOne") != std::string::npos);

    const auto opts = run({"construct", "--family", "F1", "--options", "k=4", "--options", "omit=1-3"});
    CHECK(opts.code == kExitPass);
    CHECK(decode(opts.out) == build_family_F1(4, {{1, 3}}));

    std::ofstream(scratch("bad_spec")) << "family = F\nk = 4\nm = 2\ny_prime = 3\n";
    CHECK(run({"construct", "--spec", scratch("bad_spec").string()}).code == kExitInvalid);

    std::ofstream(scratch("bad.txt")) << "kpart 2: 0,1 2,3\nC~\n";
    CHECK(run({"check", "--in", scratch("bad.txt").string()}).code == kExitInvalid);
    CHECK(run({"check", "--in", scratch("missing.txt").string()}).code == kExitInvalid);
}

TEST_CASE("check on a Hamiltonian graph") {
    std::vector<Edge> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) edges.emplace_back(u, v);
    const auto file = scratch("k44.txt");
    std::ofstream(file) << encode(build_graph(8, 2, block_partition(8, 2), edges));
    const auto r = run({"check", "--in", file.string(), "--ham", "--longest", "--chvatal"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("ham: Hamiltonian\n") != std::string::npos);
    CHECK(r.out.find("longest_cycle: 8\n") != std::string::npos);
    CHECK(r.out.find("chvatal: true\n") != std::string::npos);
}

TEST_CASE("verify and characterize") {
    const auto out = scratch("r63.json");
    const auto r = run({"verify", "--n", "6", "--k", "3", "--exhaustive", "--out", out.string()});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("status: pass") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("counters").at("graphs_meeting_floor") == 51);
    CHECK_FALSE(j.contains("wall_time_seconds"));

    CHECK(run({"verify", "--n", "6", "--k", "3", "--exhaustive", "--timing", "--out", out.string()}).code == kExitPass);
    CHECK(nlohmann::json::parse(slurp(out)).contains("wall_time_seconds"));

    CHECK(run({"verify", "--n", "6", "--k", "3", "--exhaustive", "--shards", "4", "--shard", "3"}).code == kExitPass);
    CHECK(run({"verify", "--n", "6", "--k", "3", "--exhaustive", "--shards", "4", "--shard", "4"}).code ==
          kExitInvalid);
    CHECK(run({"verify", "--n", "6", "--k", "3"}).code == kExitInvalid);
    CHECK(run({"verify", "--n", "10", "--k", "2", "--exhaustive"}).code == kExitGuard);
    CHECK(run({"verify", "--n", "12", "--k", "4", "--sample", "50", "--seed", "3"}).code == kExitPass);
    CHECK(run({"verify", "--tightness", "--k-max", "10", "--m-max", "3"}).code == kExitPass);

    CHECK(run({"characterize", "--n", "8", "--k", "4"}).code == kExitPass);
    CHECK(run({"characterize", "--n", "12", "--k", "6"}).code == kExitGuard);
    CHECK(run({"characterize", "--n", "6", "--k", "3"}).code == kExitInvalid);
    CHECK(run({"facts", "--k-max", "30", "--m-max", "10"}).code == kExitPass);
}
