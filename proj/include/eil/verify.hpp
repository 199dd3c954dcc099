#ifndef EIL_VERIFY_HPP
#define EIL_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eil/field.hpp"

namespace eil {

inline constexpr const char* eil_version = "1.0.0";

struct InstanceResult {
    std::string id;
    bool pass = true;
    nlohmann::json details; // counterexamples carry the full instance data
};

struct VerificationReport {
    std::string claim;
    std::string corpus;
    std::string field;
    std::string version;
    long instance_count = 0;
    bool all_pass = true;
    long wall_ms = 0; // excluded from the byte-determinism contract
    std::vector<InstanceResult> instances;

    nlohmann::json to_json() const;
    std::string to_table() const;
    std::string to_csv() const; // per-instance rows
};

// String ranges (from config files and --range flags) controlling corpus
// sizes; unknown keys are ignored by claims that do not read them.
using RangeMap = std::map<std::string, std::string>;

// key=value lines, '#' comments.
RangeMap parse_range_config(const std::string& text);

std::vector<std::string> known_claims();

// Replays one claim over its enumerated corpus.  Throws
// std::invalid_argument for unknown claims.
VerificationReport run_verify(const std::string& claim, const RangeMap& ranges,
                              const FieldSpec& field, int jobs);

} // namespace eil

#endif
