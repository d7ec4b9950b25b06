#include "kham/report.hpp"

#include "kham/error.hpp"

namespace kham {

namespace {

nlohmann::ordered_json records(const std::vector<GraphRecord>& list) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : list) {
        nlohmann::ordered_json j;
        j["graph"] = r.graph;
        j["status"] = r.status;
        j["detail"] = r.detail;
        if (r.classification) j["classification"] = *r.classification;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["artifact_version"] = kArtifactVersion;
    j["run_kind"] = run_kind;
    j["status"] = passed() ? "pass" : "fail";
    j["parameters"] = parameters;
    j["counters"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : counters) j["counters"][name] = value;
    j["counterexamples"] = records(counterexamples);
    j["exceptional"] = records(exceptional);
    j["classification_counts"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : classification_counts) j["classification_counts"][name] = value;
    j["self_check"] = {{"records_checked", records_checked}, {"ok", self_check_ok}};
    if (incomplete) j["incomplete"] = true;
    if (include_timing) j["wall_time_seconds"] = wall_seconds;
    return j;
}

std::string VerificationReport::to_text(bool include_timing) const { return to_json(include_timing).dump(2) + "\n"; }

VerificationReport merge_reports(const std::vector<VerificationReport>& parts) {
    if (parts.empty()) throw InvalidArgument("nothing to merge");
    VerificationReport out;
    out.run_kind = parts.front().run_kind;
    out.parameters = parts.front().parameters;
    for (const auto& p : parts) {
        for (const auto& [name, value] : p.counters) out.counters[name] += value;
        for (const auto& [name, value] : p.classification_counts) out.classification_counts[name] += value;
        out.counterexamples.insert(out.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
        out.exceptional.insert(out.exceptional.end(), p.exceptional.begin(), p.exceptional.end());
        out.records_checked += p.records_checked;
        out.self_check_ok = out.self_check_ok && p.self_check_ok;
        out.incomplete = out.incomplete || p.incomplete;
        out.wall_seconds = std::max(out.wall_seconds, p.wall_seconds);
    }
    return out;
}

}  // namespace kham
