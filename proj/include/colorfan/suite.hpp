#pragma once

#include "colorfan/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace colorfan {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteConfig {
    std::uint64_t seed = 20250808;
    int degree_volume_samples = 200;
    int degree_volume_noncubical_min = 50;
    int normal_complex_samples = 100;
    int roundtrip_samples = 1000;
    int threads = 0;           // 0 = hardware concurrency, capped by COLORFAN_THREADS
    std::vector<int> criteria; // empty = all ten
};

SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json suite_result_to_json(const std::vector<CriterionResult>& results);

/// Runs the verification suites, one CriterionResult per requested
/// criterion. Failures are recorded, never thrown; the suite always
/// completes.
std::vector<CriterionResult> run_suite(const SuiteConfig& config);

/// Worker count: `requested`, or hardware concurrency when 0, capped by the
/// COLORFAN_THREADS environment variable.
int effective_thread_count(int requested);

/// Work-stealing loop with deterministic per-index results; the first
/// exception is rethrown after all workers drain.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

} // namespace colorfan
