#pragma once

#include "surcsp/core.hpp"
#include "surcsp/rational.hpp"
#include "surcsp/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surcsp::harness {

// Recipe for one random instance over a fixed template.
struct GenSpec {
    Structure templ;
    int elements = 0;
    std::vector<long long> tuple_counts;  // one entry per signature relation
    std::uint64_t seed = 0;
    // When set, sampled tuples have pairwise distinct entries (no loops).
    bool distinct_entries = false;
};

// Uniformly sampled distinct tuples per relation; reproducible per seed.
Structure gen_instance(const GenSpec& spec);

struct TrialRow {
    std::string instance_id;
    std::string mode;
    long long value = 0;
    std::optional<long long> opt;
    std::optional<Rational> ratio;
    std::optional<Rational> bound;
    std::uint64_t seed = 0;
    long long wall_ms = 0;
    std::optional<Assignment> assignment;
};

struct ModeSummary {
    std::string mode;
    std::optional<Rational> min_ratio;
    std::optional<Rational> mean_ratio;
    long long rows = 0;
    long long rows_with_ratio = 0;
};

struct ExperimentOptions {
    bool with_oracle = false;
    bool include_assignments = false;
    bool deterministic = false;
    bool enumerate_all = true;
    bool paper_anchors = false;
    Rational epsilon{1, 10};
    long long cap = 20'000'000;
};

struct ExperimentReport {
    std::vector<TrialRow> rows;
    std::vector<ModeSummary> summary;
};

// One row per instance x mode. Oracle (brute-force optimum, surjective for
// surjective modes) fills the opt/ratio columns when requested; a cap
// overrun leaves them empty for that row instead of aborting the run.
ExperimentReport run_experiment(const std::vector<GenSpec>& specs,
                                const std::vector<std::string>& modes,
                                const ExperimentOptions& options);

// CSV with the fixed column set (plus `assignment` when included).
std::string to_csv(const ExperimentReport& report, bool include_assignments);

}  // namespace surcsp::harness
