#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capelli/report.hpp"

namespace capelli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SignSelection { plus, minus, both };

struct SuiteConfig {
    std::vector<std::string> selection{"all"};
    int max_n = 0; // 0: 2, or 3 with extended
    SignSelection signs = SignSelection::both;
    std::optional<std::string> json_path;
    bool fail_fast = false;
    bool extended = false;
    bool strict_conditional = false;
    int workers = 0; // 0: NC_CAPELLI_WORKERS, then the OpenMP default

    int effective_max_n() const { return max_n > 0 ? max_n : (extended ? 3 : 2); }
};

struct Job {
    std::string id;
    Json params;
    std::function<VerificationReport()> run;
};

// Every registered id in report order.
const std::vector<std::string>& verifier_ids();

// Jobs for the selection; throws ConfigError for unknown ids or a bad max_n.
std::vector<Job> plan_suite(const SuiteConfig& config);

struct SuiteResult {
    std::vector<VerificationReport> reports;
    bool passed = true;
    bool stopped_early = false;
};

// A report counts against the run unless it passed, or it is conditional and
// strict_conditional is off.
bool report_counts_as_failure(const VerificationReport& r, bool strict_conditional);

// Runs the planned jobs on a bounded OpenMP pool; reports keep plan order.
SuiteResult run_suite(const SuiteConfig& config);

// {version, suite, startedAt, reports}
Json suite_json(const SuiteConfig& config, const SuiteResult& result, const std::string& started_at);

// Worker count from the config, then NC_CAPELLI_WORKERS; 0 when neither is set.
int resolve_workers(const SuiteConfig& config);

std::string utc_timestamp();

} // namespace capelli
