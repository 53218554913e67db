#include "surcsp/harness.hpp"

#include "surcsp/approx.hpp"
#include "surcsp/exact.hpp"
#include "surcsp/rng.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace surcsp::harness {

namespace {

long long tuple_space(int elements, int arity, bool distinct) {
    long long space = 1;
    for (int i = 0; i < arity; ++i) {
        long long base = distinct ? elements - i : elements;
        if (base <= 0) return 0;
        if (space > (std::numeric_limits<long long>::max)() / base) return (std::numeric_limits<long long>::max)();
        space *= base;
    }
    return space;
}

std::vector<int> decode_tuple(long long code, int elements, int arity) {
    std::vector<int> tuple(static_cast<size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        tuple[static_cast<size_t>(i)] = static_cast<int>(code % elements);
        code /= elements;
    }
    return tuple;
}

bool all_distinct(const std::vector<int>& tuple) {
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j]) return false;
    return true;
}

}  // namespace

Structure gen_instance(const GenSpec& spec) {
    const int n = spec.elements;
    const auto& sig = spec.templ.signature();
    if (n < 0) throw InvalidArgument("gen_instance: negative element count");
    if (spec.tuple_counts.size() != static_cast<size_t>(sig.relation_count()))
        throw InvalidArgument("gen_instance: one tuple count per relation required");

    Rng rng(spec.seed);
    std::vector<std::vector<std::vector<int>>> tuples;
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int k = sig.relation(r).arity;
        const long long want = spec.tuple_counts[static_cast<size_t>(r)];
        const long long space = tuple_space(n, k, spec.distinct_entries);
        if (want < 0) throw InvalidArgument("gen_instance: negative tuple count");
        if (want > space)
            throw InvalidArgument("gen_instance: relation '" + sig.relation(r).name +
                                  "' requests " + std::to_string(want) + " tuples but only " +
                                  std::to_string(space) + " exist");

        std::vector<std::vector<int>> list;
        const long long full_space = tuple_space(n, k, false);
        if (full_space <= (1 << 20)) {
            // Enumerate the space and take a partial Fisher-Yates prefix.
            std::vector<std::vector<int>> pool;
            for (long long code = 0; code < full_space; ++code) {
                auto tuple = decode_tuple(code, n, k);
                if (!spec.distinct_entries || all_distinct(tuple)) pool.push_back(std::move(tuple));
            }
            for (long long i = 0; i < want; ++i) {
                const auto j =
                    i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(pool.size() - static_cast<size_t>(i))));
                std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
            }
            list.assign(pool.begin(), pool.begin() + want);
        } else {
            std::set<std::vector<int>> chosen;
            while (static_cast<long long>(chosen.size()) < want) {
                std::vector<int> tuple(static_cast<size_t>(k));
                for (int i = 0; i < k; ++i) tuple[static_cast<size_t>(i)] = rng.below_int(n);
                if (spec.distinct_entries && !all_distinct(tuple)) continue;
                chosen.insert(std::move(tuple));
            }
            list.assign(chosen.begin(), chosen.end());
        }
        tuples.push_back(std::move(list));
    }
    return Structure(sig, n, std::move(tuples));
}

namespace {

bool mode_is_surjective(const std::string& mode) {
    return mode == "exact-sur" || mode == "mincut" || mode == "approx-seeded" ||
           mode == "approx2" || mode == "ptas";
}

SolveReport dispatch_mode(const std::string& mode, const Structure& instance,
                          const Structure& templ, std::uint64_t seed,
                          const ExperimentOptions& options) {
    const bool randomized = !options.deterministic;
    if (mode == "exact") return exact::brute_force(instance, templ, false, options.cap);
    if (mode == "exact-sur") return exact::brute_force(instance, templ, true, options.cap);
    if (mode == "mincut")
        return exact::two_monotone_solve(instance, templ,
                                         options.paper_anchors ? exact::AnchorMode::Paper
                                                               : exact::AnchorMode::Extended);
    if (mode == "approx-random") return approx::max_csp_approx(instance, templ, randomized, seed);
    if (mode == "approx-seeded") return approx::approx_seeded(instance, templ, randomized, seed);
    if (mode == "approx2")
        return approx::approx2_solve(instance, templ, randomized, seed, options.enumerate_all);
    if (mode == "ptas")
        return approx::ptas_solve(instance, templ, options.epsilon, approx::auto_solver(templ),
                                  options.cap);
    throw InvalidArgument("unknown mode '" + mode + "'");
}

}  // namespace

ExperimentReport run_experiment(const std::vector<GenSpec>& specs,
                                const std::vector<std::string>& modes,
                                const ExperimentOptions& options) {
    ExperimentReport report;
    for (size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        const Structure instance = gen_instance(spec);
        char id[32];
        std::snprintf(id, sizeof(id), "i%04zu", i);

        for (const auto& mode : modes) {
            TrialRow row;
            row.instance_id = id;
            row.mode = mode;
            const std::uint64_t trial_seed = Rng::derive(spec.seed, 1 + i);
            row.seed = trial_seed;

            const auto start = std::chrono::steady_clock::now();
            SolveReport solve = dispatch_mode(mode, instance, spec.templ, trial_seed, options);
            row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            row.value = solve.value;
            if (solve.guarantee && solve.guarantee->ratio) row.bound = solve.guarantee->ratio;
            if (options.include_assignments) row.assignment = solve.assignment;

            if (options.with_oracle) {
                try {
                    const auto oracle = exact::brute_force(instance, spec.templ,
                                                           mode_is_surjective(mode), options.cap);
                    row.opt = oracle.value;
                    if (oracle.value > 0) row.ratio = Rational(row.value, oracle.value);
                } catch (const CapExceeded&) {
                    // opt/ratio stay empty for this row
                }
            }
            report.rows.push_back(std::move(row));
        }
    }

    for (const auto& mode : modes) {
        ModeSummary summary;
        summary.mode = mode;
        Rational sum(0);
        for (const auto& row : report.rows) {
            if (row.mode != mode) continue;
            ++summary.rows;
            if (!row.ratio) continue;
            ++summary.rows_with_ratio;
            sum += *row.ratio;
            if (!summary.min_ratio || *row.ratio < *summary.min_ratio) summary.min_ratio = row.ratio;
        }
        if (summary.rows_with_ratio > 0) summary.mean_ratio = sum / Rational(summary.rows_with_ratio);
        report.summary.push_back(std::move(summary));
    }
    return report;
}

std::string to_csv(const ExperimentReport& report, bool include_assignments) {
    std::ostringstream out;
    out << "instance_id,mode,value,opt,ratio,bound,seed,wall_ms";
    if (include_assignments) out << ",assignment";
    out << "\n";
    for (const auto& row : report.rows) {
        out << row.instance_id << "," << row.mode << "," << row.value << ",";
        if (row.opt) out << *row.opt;
        out << ",";
        if (row.ratio) out << to_decimal(*row.ratio);
        out << ",";
        if (row.bound) out << to_decimal(*row.bound);
        out << "," << row.seed << "," << row.wall_ms;
        if (include_assignments) {
            out << ",";
            if (row.assignment) {
                for (size_t i = 0; i < row.assignment->size(); ++i) {
                    if (i) out << " ";
                    out << (*row.assignment)[i];
                }
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace surcsp::harness
