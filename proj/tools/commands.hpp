#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace heckelab::cli {

enum class Command { validate, rank, structure, newton, cayley_hamilton, charpoly };

Command parse_command(const std::string& name);
std::string command_name(Command c);

struct RunConfig {
    Command command = Command::validate;
    std::optional<std::string> input;    // R-matrix file
    std::optional<std::string> builtin;  // "std:N" | "perm:N"
    std::string field = "auto";          // auto | symbolic | sampled:K | modular:P[:K]
    std::uint64_t seed = 1;
    int rank_bound = 8;
    bool json = false;
    std::optional<std::string> output;
};

enum class Status { proved, verified, failed, skipped };

struct CheckRecord {
    std::string name;
    Status status = Status::proved;
    int points = 0;        // specializations at which the check passed
    std::string detail;
    std::string witness;   // failing location or residual, if any
    double seconds = 0.0;
};

struct Report {
    std::string version;
    RunConfig config;
    std::string field_description;
    std::vector<std::string> points;  // one label per specialization
    std::vector<CheckRecord> checks;  // sorted by name
    nlohmann::ordered_json data;      // command-specific output, keyed by point label
    double seconds = 0.0;

    bool failed() const;
    int exit_code() const { return failed() ? 1 : 0; }
};

// Runs one command. Throws ParseError / ArgumentError for malformed input or
// configuration; all mathematical failures are recorded in the report.
Report run(const RunConfig& config);

std::string status_name(Status s);
nlohmann::ordered_json to_json(const Report& r, bool include_timings = true);
std::string to_text(const Report& r);

}  // namespace heckelab::cli
