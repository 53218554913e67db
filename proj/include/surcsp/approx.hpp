#pragma once

#include "surcsp/core.hpp"
#include "surcsp/exact.hpp"
#include "surcsp/rational.hpp"
#include "surcsp/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace surcsp::approx {

// min_i |R_i^B| / |B|^{k_i}: the probability floor a uniformly random
// assignment gives each constraint.
Rational r_random(const Structure& templ);

// 1 - k_max * |B| / |A|, the degree-seeding loss factor.
Rational seeded_structural_factor(const Structure& instance, const Structure& templ);

// 1 - k_max * |B| / (|A| - |B|), the repair loss factor. Requires |A| > |B|.
Rational repair_structural_factor(const Structure& instance, const Structure& templ);

// Exact expected satisfied count when every unassigned element is drawn
// independently and uniformly from the template domain. Repeated elements
// inside one tuple are drawn once, not per position.
Rational expected_value(const Structure& instance, const Structure& templ,
                        const PartialAssignment& partial);

// Conditional-expectation completion: fixes unassigned elements in index
// order, each time choosing the value with the largest expectation (ties:
// smallest value). If step_expectations is given, it receives the
// expectation before any step and after each fix; the sequence is
// non-decreasing and the final entry equals the achieved integer value.
Assignment derandomize(const Structure& instance, const Structure& templ,
                       const PartialAssignment& seed_partial,
                       std::vector<Rational>* step_expectations = nullptr);

// Random assignment baseline (or its derandomized form): every element
// uniform on B, guarantee r_random.
SolveReport max_csp_approx(const Structure& instance, const Structure& templ, bool randomized,
                           std::uint64_t seed = 0);

// Degree-seeded surjective approximation: sort elements by (degree, index),
// map the first |B| bijectively onto B in sorted order, then complete the
// rest uniformly at random or by conditional expectations.
SolveReport approx_seeded(const Structure& instance, const Structure& templ, bool randomized,
                          std::uint64_t seed = 0);

// Adds |B| fresh, tuple-free elements so surjectivity costs nothing.
Structure pad_instance(const Structure& instance, const Structure& templ);

// Restriction of a padded solution back to the original elements.
Assignment unpad_solution(const Assignment& h_padded, int original_size);

// Surjectivity repair: reassign one sacrificial element per missing value,
// choosing among the elements whose value is currently shared. With
// enumerate_all, every choice sequence is tried and the best completion is
// returned (ties: lexicographically smallest sequence); otherwise a single
// run picks uniformly at random (randomized) or the smallest candidate.
SolveReport repair(const Structure& instance, const Structure& templ, const Assignment& h,
                   bool randomized, std::uint64_t seed, bool enumerate_all);

// Full two-phase pipeline: random-assignment baseline (or its derandomized
// form) followed by surjectivity repair.
SolveReport approx2_solve(const Structure& instance, const Structure& templ, bool randomized,
                          std::uint64_t seed, bool enumerate_all);

// A plain Max-CSP solver usable as the inner routine of the PTAS driver.
struct MaxCspSolver {
    std::string name;
    Rational ratio{1};
    std::function<Assignment(const Structure&, const Structure&)> solve;
};

// Constant-v assignment; exact (ratio 1) iff the all-v tuple lies in every
// template relation, which the factory verifies.
MaxCspSolver make_constant_solver(const Structure& templ, int value);

// Deterministic conditional-expectation solver, ratio r_random.
MaxCspSolver make_greedy_solver(const Structure& templ);

// Unanchored min-cut solver for 2-monotone Boolean templates, ratio 1.
MaxCspSolver make_mincut_solver(const Structure& templ);

// Best available inner solver for the template: a constant exact solver if
// some all-v tuple lies in every relation, the min-cut solver for
// 2-monotone Boolean templates, else the greedy baseline.
MaxCspSolver auto_solver(const Structure& templ);

// PTAS driver: brute-force below the size cutoff N0 = floor(r*|B|*k_max/e) + |B|,
// otherwise inner solve followed by enumerate-all repair. Guarantee r - e.
SolveReport ptas_solve(const Structure& instance, const Structure& templ, const Rational& epsilon,
                       const MaxCspSolver& inner,
                       long long cap = exact::kDefaultBruteForceCap);

}  // namespace surcsp::approx
