#pragma once

#include "surcsp/core.hpp"
#include "surcsp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace surcsp {

// Guarantee metadata attached to approximate solves. r_random is the
// min_i |R_i^B| / |B|^{k_i} baseline; structural_factor is the size-dependent
// multiplier of the seeded/repair analyses (absent when it does not apply,
// nonpositive values are recorded but yield no ratio).
struct RatioBound {
    Rational r_random{0};
    int k_max = 0;
    int template_size = 0;
    std::optional<Rational> structural_factor;
    std::optional<Rational> ratio;
};

struct SolveReport {
    Assignment assignment;
    long long value = 0;
    std::string mode;
    std::optional<std::uint64_t> seed;
    std::optional<RatioBound> guarantee;
    std::optional<long long> choices_enumerated;
    std::optional<long long> cutoff_n0;  // PTAS driver only
};

}  // namespace surcsp
