#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rci::cli {

inline constexpr const char* kToolName = "rci";
inline constexpr const char* kVersion = "1.0.0";

const std::vector<std::string>& subcommands();

struct JobRequest {
    std::string subcommand;
    nlohmann::json input;
    std::uint64_t seed = 20200320;
    unsigned trials = 5;
    std::int64_t coeff_bound = 16;
    unsigned retries = 16;
};

struct JobResult {
    int exit_code = 0;
    nlohmann::json report;  // on failure: {"error": {"kind": ..., "message": ...}}
};

/// Exit codes: 0 success, 1 internal error, 2 malformed input, 3 mathematical
/// degeneracy, 4 oracle retries exhausted.
JobResult run(const JobRequest& req);

/// Serialized report, compact or indented; always newline-terminated.
std::string render(const nlohmann::json& report, bool pretty);

/// Plain-text table of the scalar result fields.
std::string render_table(const nlohmann::json& report);

}  // namespace rci::cli
