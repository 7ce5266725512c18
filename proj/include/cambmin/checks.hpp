#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cambmin/cartan.hpp"

namespace cambmin {

/*
 * Named verification runs over the library. Every identity the library
 * implements is reachable from exactly one target below; the CLI and the
 * acceptance driver both go through this layer, so they cannot drift apart.
 */

enum class CheckStatus { kPass, kFail, kSkipped };

struct CheckResult {
    std::string name;      // owning target
    std::string instance;  // which case of the target, human readable
    CheckStatus status = CheckStatus::kPass;
    std::string witness;   // populated exactly when the status is kFail
    double elapsed_ms = 0;
};

std::string status_str(CheckStatus s);

// Options shared by all targets; unset fields fall back to per-target
// defaults chosen to cover the full sweep.
struct CheckOptions {
    std::optional<std::string> type;      // registry name, e.g. "A2"
    std::optional<std::string> cartan_json;  // config file overriding type
    std::optional<std::vector<int>> cox;  // 0-based generator order
    std::optional<int> bound;             // g-vector box radius / length cap
    std::optional<std::size_t> n;         // coefficient table size
    std::optional<std::string> kind;      // greedy | triangular | generic
    std::uint64_t seed = 0x5eed;
};

// One schedulable unit of work. Jobs of a target are independent; results
// are reported in planning order no matter how they were scheduled.
struct CheckJob {
    std::string target;
    std::string label;
    std::function<std::vector<CheckResult>()> run;
};

struct CheckTarget {
    std::string name;
    std::string coverage;  // one line: what passing this target certifies
    std::function<std::vector<CheckJob>(const CheckOptions&)> plan;
};

const std::vector<CheckTarget>& check_registry();

// Expands "all", rejects unknown names with std::invalid_argument.
std::vector<CheckJob> plan_checks(const std::vector<std::string>& targets,
                                  const CheckOptions& opts);

// Runs jobs on `workers` threads (1 = inline). A job that throws becomes a
// single failed result carrying the exception text.
std::vector<CheckResult> run_jobs(const std::vector<CheckJob>& jobs, std::size_t workers);

// Worker count from the CAMBMIN_WORKERS environment variable, clamped to
// [1, hardware_concurrency]; `fallback` when unset or unparsable.
std::size_t worker_count_from_env(std::size_t fallback = 1);

bool all_passed(const std::vector<CheckResult>& results);

// The individual planners, exposed for callers that need their own timing
// granularity (the acceptance driver times these one by one).
std::vector<CheckJob> plan_intro(const CheckOptions& opts);
std::vector<CheckJob> plan_thm_main(const CheckOptions& opts);
std::vector<CheckJob> plan_projections(const CheckOptions& opts);
std::vector<CheckJob> plan_exchange(const CheckOptions& opts);
std::vector<CheckJob> plan_maps(const CheckOptions& opts);
std::vector<CheckJob> plan_cambrian(const CheckOptions& opts);
std::vector<CheckJob> plan_minor_oracle(const CheckOptions& opts);
std::vector<CheckJob> plan_basis(const CheckOptions& opts);
std::vector<CheckJob> plan_binomials(const CheckOptions& opts);
std::vector<CheckJob> plan_negative_control(const CheckOptions& opts);

// Resolve the Cartan data requested by the options (JSON file wins over the
// registry name); `fallback` is used when neither is set.
CartanData resolve_cartan(const CheckOptions& opts, const std::string& fallback);

}  // namespace cambmin
