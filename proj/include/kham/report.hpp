#pragma once

// Verification report and its JSON form.
//
//   {
//     "schema_version": 1,
//     "artifact_version": "0.1.0",
//     "run_kind": "exhaustive" | "sample" | "tightness" | "characterization" | "facts",
//     "status": "pass" | "fail",
//     "parameters": { ... },
//     "counters": { name: integer, ... },
//     "counterexamples": [ { "graph": "<header>\n<graph6>\n", "status": ..., "detail": ...,
//                            "classification"?: ... } ],
//     "exceptional": [ same shape ],          // expected non-Hamiltonian graphs
//     "classification_counts": { "InF1": .., "IsoF2": .., "InF3": .., "None": .. },
//     "self_check": { "records_checked": .., "ok": true },
//     "wall_time_seconds": ...                // only when timing is requested
//   }
//
// Keys appear in exactly this order and counters are sorted by name, so two
// runs with the same parameters produce identical bytes (timing excluded).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace kham {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

struct GraphRecord {
    std::string graph;
    std::string status;
    std::string detail;
    std::optional<std::string> classification;

    bool operator==(const GraphRecord&) const = default;
};

struct VerificationReport {
    std::string run_kind;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::map<std::string, std::int64_t> counters;
    std::vector<GraphRecord> counterexamples;
    std::vector<GraphRecord> exceptional;
    std::map<std::string, std::int64_t> classification_counts;
    std::int64_t records_checked = 0;
    bool self_check_ok = true;
    bool incomplete = false;  // e.g. abandoned sampling trials
    double wall_seconds = 0.0;

    bool passed() const { return counterexamples.empty() && self_check_ok && !incomplete; }
    nlohmann::ordered_json to_json(bool include_timing = false) const;
    std::string to_text(bool include_timing = false) const;
};

/// Sums counters and concatenates listings in argument order. Parameters come
/// from the first report.
VerificationReport merge_reports(const std::vector<VerificationReport>& parts);

}  // namespace kham
