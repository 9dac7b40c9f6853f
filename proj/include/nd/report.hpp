#pragma once

#include "nd/config.hpp"
#include "nd/verifier.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace nd {

using Json = nlohmann::json;

/// Roots of unity are written as {"exp": e, "conductor": N}.
Json to_json(const RootOfUnity& z);
/// list of values on the generators g_1, ..., g_n
Json to_json(const Character& chi);
Json to_json(const HopfReport& r);

struct RunOptions {
    /// subset of known_checks(); empty means all of them
    std::set<std::string> checks;
    bool exhaustive = false;
    /// exhaustive axiom checks only up to this dimension
    std::int64_t max_dim = 512;
    /// sampled axiom checks are skipped above this dimension
    std::int64_t sample_max_dim = 65536;
    /// Drin(H) is only built for dim H up to this bound
    std::int64_t generic_double_max = 16;
    bool timings = false;
};

struct RunOutcome {
    Json report;
    /// Nichols algebra not finite within the cutoff
    bool undetermined = false;
};

/// Runs dims, then the double, then the verifier, each restricted to the selected checks.
RunOutcome run_pipeline(const InputSpec& spec, const RunOptions& opts);

/// Plain-text summary of a report, one item per line.
std::string human_summary(const Json& report);

/// Paths where `actual` differs from `expected`; objects in `expected` match any superset.
std::vector<std::string> compare_expectation(const Json& expected, const Json& actual, const std::string& path = "");

}  // namespace nd
