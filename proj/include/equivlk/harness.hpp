#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equivlk/serialize.hpp"

namespace equivlk::harness {

enum class Verdict { pass, fail, info };  // info: report-only, never fails a run

struct CheckRecord {
    std::string id;
    std::string inputs_digest;  // FNV-1a 64 of the canonical inputs JSON
    Verdict verdict = Verdict::pass;
    std::optional<Json> witness;
    Json detail;
    double timing_ms = 0;
};

struct Report {
    std::string subcommand;
    uint64_t seed = 1;
    long bits = kDefaultBits;
    Json config;
    std::vector<CheckRecord> records;  // sorted by id

    long count(Verdict v) const;
    bool ok() const { return count(Verdict::fail) == 0; }
    Json to_json(bool with_timings = true) const;
    std::string table() const;
};

const std::vector<std::string>& subcommands();

// Runs one campaign. Seed and bits fall back to the config's "seed"/"bits"
// and then to per-subcommand defaults. Throws SchemaError for bad configs;
// failures of individual checks are recorded, not thrown.
Report run(const std::string& subcommand, const Json& config, std::optional<uint64_t> seed = std::nullopt,
           std::optional<long> bits = std::nullopt);

std::string fnv1a_hex(const std::string& s);

}  // namespace equivlk::harness
