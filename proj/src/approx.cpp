#include "surcsp/approx.hpp"

#include "surcsp/rng.hpp"
#include "surcsp/templates.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace surcsp::approx {

namespace {

long long checked_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > (std::numeric_limits<long long>::max)() / base)
            throw InvalidArgument("arity too large for exact ratio arithmetic");
        out *= base;
    }
    return out;
}

void check_partial(const Structure& instance, const Structure& templ,
                   const PartialAssignment& partial) {
    if (partial.size() != static_cast<size_t>(instance.size()))
        throw InvalidArgument("partial assignment length " + std::to_string(partial.size()) +
                              " != instance size " + std::to_string(instance.size()));
    for (int v : partial)
        if (v != kUnassigned && (v < 0 || v >= templ.size()))
            throw InvalidArgument("partial assignment value " + std::to_string(v) +
                                  " outside [0, " + std::to_string(templ.size()) + ")");
}

RatioBound base_bound(const Structure& templ) {
    RatioBound bound;
    bound.r_random = r_random(templ);
    bound.k_max = templ.signature().max_arity();
    bound.template_size = templ.size();
    return bound;
}

}  // namespace

Rational r_random(const Structure& templ) {
    Rational best(1);
    for (int r = 0; r < templ.signature().relation_count(); ++r) {
        const int k = templ.signature().relation(r).arity;
        Rational ratio(static_cast<long long>(templ.tuples(r).size()),
                       checked_pow(templ.size(), k));
        best = std::min(best, ratio);
    }
    return best;
}

Rational seeded_structural_factor(const Structure& instance, const Structure& templ) {
    if (instance.size() < 1)
        throw InvalidArgument("structural factor undefined for an empty instance");
    return Rational(1) - Rational(static_cast<long long>(templ.signature().max_arity()) *
                                      templ.size(),
                                  instance.size());
}

Rational repair_structural_factor(const Structure& instance, const Structure& templ) {
    if (instance.size() <= templ.size())
        throw InvalidArgument("repair structural factor requires |A| > |B|");
    return Rational(1) - Rational(static_cast<long long>(templ.signature().max_arity()) *
                                      templ.size(),
                                  instance.size() - templ.size());
}

Rational expected_value(const Structure& instance, const Structure& templ,
                        const PartialAssignment& partial) {
    if (instance.signature() != templ.signature())
        throw SignatureMismatch("expected_value: signatures differ");
    check_partial(instance, templ, partial);

    const int b = templ.size();
    Rational total(0);
    std::vector<int> free_elements;  // distinct unassigned elements of one tuple
    std::vector<int> image;

    for (int r = 0; r < instance.signature().relation_count(); ++r) {
        for (const auto& tuple : instance.tuples(r)) {
            free_elements.clear();
            for (int e : tuple)
                if (partial[static_cast<size_t>(e)] == kUnassigned &&
                    std::find(free_elements.begin(), free_elements.end(), e) ==
                        free_elements.end())
                    free_elements.push_back(e);

            const int u = static_cast<int>(free_elements.size());
            const long long completions = checked_pow(b, u);
            long long compatible = 0;
            std::vector<int> choice(static_cast<size_t>(u), 0);
            for (long long c = 0; c < completions; ++c) {
                long long rem = c;
                for (int i = 0; i < u; ++i) {
                    choice[static_cast<size_t>(i)] = static_cast<int>(rem % b);
                    rem /= b;
                }
                image.assign(tuple.size(), 0);
                for (size_t j = 0; j < tuple.size(); ++j) {
                    int e = tuple[j];
                    int v = partial[static_cast<size_t>(e)];
                    if (v == kUnassigned) {
                        auto it = std::find(free_elements.begin(), free_elements.end(), e);
                        v = choice[static_cast<size_t>(it - free_elements.begin())];
                    }
                    image[j] = v;
                }
                if (templ.contains(r, image)) ++compatible;
            }
            total += Rational(compatible, completions);
        }
    }
    return total;
}

Assignment derandomize(const Structure& instance, const Structure& templ,
                       const PartialAssignment& seed_partial,
                       std::vector<Rational>* step_expectations) {
    check_partial(instance, templ, seed_partial);
    PartialAssignment h = seed_partial;
    if (step_expectations) {
        step_expectations->clear();
        step_expectations->push_back(expected_value(instance, templ, h));
    }
    for (int e = 0; e < instance.size(); ++e) {
        if (h[static_cast<size_t>(e)] != kUnassigned) continue;
        int best_value = 0;
        Rational best_exp(-1);
        for (int v = 0; v < templ.size(); ++v) {
            h[static_cast<size_t>(e)] = v;
            Rational exp = expected_value(instance, templ, h);
            if (exp > best_exp) {
                best_exp = exp;
                best_value = v;
            }
        }
        h[static_cast<size_t>(e)] = best_value;
        if (step_expectations) step_expectations->push_back(best_exp);
    }
    return h;
}

SolveReport max_csp_approx(const Structure& instance, const Structure& templ, bool randomized,
                           std::uint64_t seed) {
    validate(instance, templ, false);
    Assignment h;
    if (randomized) {
        Rng rng(seed);
        h.reserve(static_cast<size_t>(instance.size()));
        for (int e = 0; e < instance.size(); ++e) h.push_back(rng.below_int(templ.size()));
    } else {
        h = derandomize(instance, templ,
                        PartialAssignment(static_cast<size_t>(instance.size()), kUnassigned));
    }

    SolveReport report;
    report.value = evaluate(instance, templ, h).satisfied;
    report.assignment = std::move(h);
    report.mode = "approx-random";
    if (randomized) report.seed = seed;
    RatioBound bound = base_bound(templ);
    bound.ratio = bound.r_random;
    report.guarantee = bound;
    return report;
}

SolveReport approx_seeded(const Structure& instance, const Structure& templ, bool randomized,
                          std::uint64_t seed) {
    validate(instance, templ, true);

    std::vector<int> order(static_cast<size_t>(instance.size()));
    std::iota(order.begin(), order.end(), 0);
    const auto degs = degrees(instance);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degs[static_cast<size_t>(a)] < degs[static_cast<size_t>(b)]; });

    PartialAssignment h(static_cast<size_t>(instance.size()), kUnassigned);
    for (int v = 0; v < templ.size(); ++v) h[static_cast<size_t>(order[static_cast<size_t>(v)])] = v;

    Assignment full;
    if (randomized) {
        Rng rng(seed);
        full = h;
        for (int e = 0; e < instance.size(); ++e)
            if (full[static_cast<size_t>(e)] == kUnassigned)
                full[static_cast<size_t>(e)] = rng.below_int(templ.size());
    } else {
        full = derandomize(instance, templ, h);
    }

    SolveReport report;
    report.value = evaluate(instance, templ, full).satisfied;
    report.assignment = std::move(full);
    report.mode = "approx-seeded";
    if (randomized) report.seed = seed;
    RatioBound bound = base_bound(templ);
    bound.structural_factor = seeded_structural_factor(instance, templ);
    if (*bound.structural_factor > Rational(0))
        bound.ratio = *bound.structural_factor * bound.r_random;
    report.guarantee = bound;
    return report;
}

Structure pad_instance(const Structure& instance, const Structure& templ) {
    if (instance.signature() != templ.signature())
        throw SignatureMismatch("pad_instance: signatures differ");
    return Structure(instance.signature(), instance.size() + templ.size(), instance.all_tuples());
}

Assignment unpad_solution(const Assignment& h_padded, int original_size) {
    if (original_size < 0 || h_padded.size() < static_cast<size_t>(original_size))
        throw InvalidArgument("unpad_solution: padded assignment shorter than original size");
    return Assignment(h_padded.begin(), h_padded.begin() + original_size);
}

namespace {

// All elements whose current value is shared with some other element,
// skipping elements already reassigned by the repair.
std::vector<int> shared_value_elements(const Assignment& h, int template_size,
                                       const std::vector<bool>& reassigned) {
    std::vector<int> holders(static_cast<size_t>(template_size), 0);
    for (int v : h) ++holders[static_cast<size_t>(v)];
    std::vector<int> out;
    for (size_t x = 0; x < h.size(); ++x)
        if (!reassigned[x] && holders[static_cast<size_t>(h[x])] >= 2)
            out.push_back(static_cast<int>(x));
    return out;
}

struct RepairSearch {
    const Structure& instance;
    const Structure& templ;
    const std::vector<int>& missing;
    long long best_value = -1;
    Assignment best;
    long long leaves = 0;

    void dfs(Assignment& h, std::vector<bool>& reassigned, size_t step) {
        if (step == missing.size()) {
            ++leaves;
            long long value = evaluate(instance, templ, h).satisfied;
            if (value > best_value) {
                best_value = value;
                best = h;
            }
            return;
        }
        auto candidates = shared_value_elements(h, templ.size(), reassigned);
        if (candidates.empty())
            throw NoSolution("repair: no reassignable element for value " +
                             std::to_string(missing[step]));
        for (int x : candidates) {
            int old = h[static_cast<size_t>(x)];
            h[static_cast<size_t>(x)] = missing[step];
            reassigned[static_cast<size_t>(x)] = true;
            dfs(h, reassigned, step + 1);
            reassigned[static_cast<size_t>(x)] = false;
            h[static_cast<size_t>(x)] = old;
        }
    }
};

}  // namespace

SolveReport repair(const Structure& instance, const Structure& templ, const Assignment& h,
                   bool randomized, std::uint64_t seed, bool enumerate_all) {
    validate(instance, templ, true);
    if (h.size() != static_cast<size_t>(instance.size()))
        throw InvalidArgument("repair: assignment length mismatch");
    for (int v : h)
        if (v < 0 || v >= templ.size())
            throw InvalidArgument("repair: assignment value out of range");

    SolveReport report;
    report.mode = "repair";
    RatioBound bound = base_bound(templ);
    if (instance.size() > templ.size())
        bound.structural_factor = repair_structural_factor(instance, templ);

    if (is_surjective(h, templ.size())) {
        report.assignment = h;
        report.value = evaluate(instance, templ, h).satisfied;
        report.choices_enumerated = 1;
        report.guarantee = bound;
        return report;
    }

    std::vector<bool> present(static_cast<size_t>(templ.size()), false);
    for (int v : h) present[static_cast<size_t>(v)] = true;
    std::vector<int> missing;
    for (int v = 0; v < templ.size(); ++v)
        if (!present[static_cast<size_t>(v)]) missing.push_back(v);

    Assignment result;
    long long choices = 0;
    if (enumerate_all) {
        RepairSearch search{instance, templ, missing, -1, {}, 0};
        Assignment work = h;
        std::vector<bool> reassigned(static_cast<size_t>(instance.size()), false);
        search.dfs(work, reassigned, 0);
        result = std::move(search.best);
        choices = search.leaves;
    } else {
        Rng rng(seed);
        result = h;
        std::vector<bool> reassigned(static_cast<size_t>(instance.size()), false);
        for (int b : missing) {
            auto candidates = shared_value_elements(result, templ.size(), reassigned);
            if (candidates.empty())
                throw NoSolution("repair: no reassignable element for value " + std::to_string(b));
            int x = randomized
                        ? candidates[static_cast<size_t>(rng.below(candidates.size()))]
                        : candidates.front();
            result[static_cast<size_t>(x)] = b;
            reassigned[static_cast<size_t>(x)] = true;
        }
        choices = 1;
        if (randomized) report.seed = seed;
    }

    report.value = evaluate(instance, templ, result).satisfied;
    report.assignment = std::move(result);
    report.choices_enumerated = choices;
    report.guarantee = bound;
    return report;
}

SolveReport approx2_solve(const Structure& instance, const Structure& templ, bool randomized,
                          std::uint64_t seed, bool enumerate_all) {
    validate(instance, templ, true);
    SolveReport inner = max_csp_approx(instance, templ, randomized, Rng::derive(seed, 0));
    SolveReport report =
        repair(instance, templ, inner.assignment, randomized, Rng::derive(seed, 1), enumerate_all);
    report.mode = "approx2";
    report.seed.reset();
    if (randomized) report.seed = seed;
    RatioBound bound = base_bound(templ);
    if (instance.size() > templ.size()) {
        bound.structural_factor = repair_structural_factor(instance, templ);
        if (*bound.structural_factor > Rational(0))
            bound.ratio = *bound.structural_factor * bound.r_random;
    }
    report.guarantee = bound;
    return report;
}

MaxCspSolver make_constant_solver(const Structure& templ, int value) {
    if (value < 0 || value >= templ.size())
        throw InvalidArgument("constant solver: value out of range");
    for (int r = 0; r < templ.signature().relation_count(); ++r) {
        const int k = templ.signature().relation(r).arity;
        if (!templ.contains(r, std::vector<int>(static_cast<size_t>(k), value)))
            throw InvalidArgument("constant solver: all-" + std::to_string(value) +
                                  " tuple missing from relation '" +
                                  templ.signature().relation(r).name + "'");
    }
    MaxCspSolver solver;
    solver.name = "const" + std::to_string(value);
    solver.ratio = Rational(1);
    solver.solve = [value](const Structure& instance, const Structure&) {
        return Assignment(static_cast<size_t>(instance.size()), value);
    };
    return solver;
}

MaxCspSolver make_greedy_solver(const Structure& templ) {
    MaxCspSolver solver;
    solver.name = "greedy";
    solver.ratio = r_random(templ);
    solver.solve = [](const Structure& instance, const Structure& t) {
        return derandomize(instance, t,
                           PartialAssignment(static_cast<size_t>(instance.size()), kUnassigned));
    };
    return solver;
}

MaxCspSolver make_mincut_solver(const Structure& templ) {
    if (templ.size() != 2 || !templates::classify_boolean(templ).two_monotone)
        throw InvalidArgument("mincut solver requires a 2-monotone Boolean template");
    MaxCspSolver solver;
    solver.name = "mincut";
    solver.ratio = Rational(1);
    solver.solve = [](const Structure& instance, const Structure& t) {
        return exact::two_monotone_max_csp(instance, t).assignment;
    };
    return solver;
}

MaxCspSolver auto_solver(const Structure& templ) {
    for (int v = 0; v < templ.size(); ++v) {
        bool constant_valid = true;
        for (int r = 0; r < templ.signature().relation_count() && constant_valid; ++r) {
            const int k = templ.signature().relation(r).arity;
            if (!templ.contains(r, std::vector<int>(static_cast<size_t>(k), v)))
                constant_valid = false;
        }
        if (constant_valid) return make_constant_solver(templ, v);
    }
    if (templ.size() == 2 && templates::classify_boolean(templ).two_monotone)
        return make_mincut_solver(templ);
    return make_greedy_solver(templ);
}

SolveReport ptas_solve(const Structure& instance, const Structure& templ, const Rational& epsilon,
                       const MaxCspSolver& inner, long long cap) {
    validate(instance, templ, true);
    if (epsilon <= Rational(0)) throw InvalidArgument("ptas_solve: epsilon must be positive");

    const Rational cutoff = inner.ratio * Rational(templ.size()) *
                            Rational(templ.signature().max_arity()) / epsilon;
    const long long n0 = floor_rational(cutoff) + templ.size();

    SolveReport report;
    if (instance.size() <= n0) {
        try {
            report = exact::brute_force(instance, templ, true, cap);
        } catch (const CapExceeded& e) {
            throw CapExceeded(std::string(e.what()) + " (PTAS cutoff N0 = " + std::to_string(n0) +
                              "; lower epsilon to shrink the cutoff or raise the cap)");
        }
        report.mode = "ptas/bruteforce";
    } else {
        Assignment h = inner.solve(instance, templ);
        report = repair(instance, templ, h, false, 0, true);
        report.mode = "ptas/repair";
    }
    RatioBound bound = base_bound(templ);
    bound.ratio = inner.ratio - epsilon;
    if (instance.size() > templ.size())
        bound.structural_factor = repair_structural_factor(instance, templ);
    report.guarantee = bound;
    report.cutoff_n0 = n0;
    return report;
}

}  // namespace surcsp::approx
