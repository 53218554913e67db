#include "surcsp/cli.hpp"

#include "surcsp/approx.hpp"
#include "surcsp/exact.hpp"
#include "surcsp/harness.hpp"
#include "surcsp/io.hpp"
#include "surcsp/rng.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace surcsp::cli {

namespace {

Rational parse_decimal(const std::string& text) {
    const auto dot = text.find('.');
    const std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw InvalidArgument("malformed decimal '" + text + "'");
    for (char c : whole + frac)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidArgument("malformed decimal '" + text + "'");
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) {
        if (den > 1'000'000'000'000'000LL)
            throw InvalidArgument("decimal '" + text + "' has too many digits");
        den *= 10;
    }
    const long long num = (whole.empty() ? 0 : std::stoll(whole)) * den +
                          (frac.empty() ? 0 : std::stoll(frac));
    return Rational(num, den);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write file '" + output_path + "'");
    file << text;
}

io::Problem load_problem(const std::string& path) { return io::parse_problem(slurp(path)); }

// Resolves --template NAME-or-FILE for gen/bench.
Structure load_template(const std::string& spec) {
    for (const auto& name : io::gallery_names())
        if (spec == name) return io::gallery_problem(spec).templ;
    if (spec.rfind("cycle:", 0) == 0) return io::gallery_problem(spec).templ;
    return load_problem(spec).templ;
}

struct SolveArgs {
    std::string file;
    std::string mode;
    std::string output;
    std::string epsilon = "0.1";
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool deterministic = false;
    bool enumerate_all = false;
    bool paper_anchors = false;
    long long cap = exact::kDefaultBruteForceCap;
};

SolveReport run_solve(const SolveArgs& args) {
    const io::Problem problem = load_problem(args.file);
    const bool randomized = args.seed_given && !args.deterministic;
    if (args.mode == "exact")
        return exact::brute_force(problem.instance, problem.templ, false, args.cap);
    if (args.mode == "exact-sur")
        return exact::brute_force(problem.instance, problem.templ, true, args.cap);
    if (args.mode == "mincut")
        return exact::two_monotone_solve(problem.instance, problem.templ,
                                         args.paper_anchors ? exact::AnchorMode::Paper
                                                            : exact::AnchorMode::Extended);
    if (args.mode == "approx-random")
        return approx::max_csp_approx(problem.instance, problem.templ, randomized, args.seed);
    if (args.mode == "approx-seeded")
        return approx::approx_seeded(problem.instance, problem.templ, randomized, args.seed);
    if (args.mode == "approx2")
        return approx::approx2_solve(problem.instance, problem.templ, randomized, args.seed,
                                     args.enumerate_all || !randomized);
    if (args.mode == "ptas")
        return approx::ptas_solve(problem.instance, problem.templ, parse_decimal(args.epsilon),
                                  approx::auto_solver(problem.templ), args.cap);
    throw InvalidArgument("unknown mode '" + args.mode + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Max-Sur-CSP solver: exact, min-cut, and approximation modes over finite "
                 "relational templates"};
    app.require_subcommand(1);

    // solve
    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve a problem file");
    solve->add_option("file", solve_args.file, "problem file (JSON)")->required();
    solve->add_option("--mode", solve_args.mode, "exact|exact-sur|mincut|approx-random|"
                                                 "approx-seeded|approx2|ptas")
        ->required();
    solve->add_option("--output", solve_args.output, "write the report here instead of stdout");
    solve->add_option("--epsilon", solve_args.epsilon, "PTAS accuracy parameter (decimal)");
    auto* seed_opt = solve->add_option("--seed", solve_args.seed, "64-bit seed; enables the "
                                                                  "randomized variants");
    solve->add_flag("--deterministic", solve_args.deterministic,
                    "force the derandomized variant even with --seed");
    solve->add_flag("--enumerate-all", solve_args.enumerate_all,
                    "repair enumerates every choice sequence");
    solve->add_flag("--paper-anchors", solve_args.paper_anchors,
                    "mincut: constraint-pair anchors only");
    solve->add_option("--cap", solve_args.cap, "brute-force evaluation cap");

    // classify
    std::string classify_file;
    auto* classify = app.add_subcommand("classify", "classify a Boolean template");
    classify->add_option("file", classify_file, "problem file (JSON)")->required();

    // gallery
    std::string gallery_name, gallery_output;
    auto* gallery = app.add_subcommand("gallery", "emit a built-in problem");
    gallery->add_option("name", gallery_name,
                        "one of: c6, cycle:<n>, c4ref, no-rainbow, asym-cut, hard-ptas")
        ->required();
    gallery->add_option("--output", gallery_output, "write the problem here instead of stdout");

    // gen
    std::string gen_template, gen_output;
    int gen_elements = 0;
    std::vector<long long> gen_tuples;
    std::uint64_t gen_seed = 0;
    bool gen_distinct = false;
    auto* gen = app.add_subcommand("gen", "generate a random instance over a template");
    gen->add_option("--template", gen_template, "gallery name or problem file")->required();
    gen->add_option("--elements", gen_elements, "instance size")->required();
    gen->add_option("--tuples", gen_tuples, "tuple count (one per relation, or one for all)")
        ->required();
    gen->add_option("--seed", gen_seed, "64-bit seed");
    gen->add_flag("--distinct-entries", gen_distinct, "sample tuples with pairwise distinct "
                                                      "entries");
    gen->add_option("--output", gen_output, "write the problem here instead of stdout");

    // bench
    std::string bench_template, bench_output, bench_modes = "approx-seeded";
    int bench_instances = 10, bench_elements = 8;
    std::vector<long long> bench_tuples;
    std::uint64_t bench_seed = 0;
    bool bench_oracle = false, bench_deterministic = false, bench_assignments = false;
    bool bench_distinct = false, bench_paper = false;
    std::string bench_epsilon = "0.1";
    long long bench_cap = exact::kDefaultBruteForceCap;
    auto* bench = app.add_subcommand("bench", "run seeded ratio experiments, CSV to stdout");
    bench->add_option("--template", bench_template, "gallery name or problem file")->required();
    bench->add_option("--instances", bench_instances, "number of random instances");
    bench->add_option("--elements", bench_elements, "instance size");
    bench->add_option("--tuples", bench_tuples, "tuple count (one per relation, or one for all)")
        ->required();
    bench->add_option("--modes", bench_modes, "comma-separated mode list");
    bench->add_option("--seed", bench_seed, "64-bit master seed");
    bench->add_flag("--with-oracle", bench_oracle, "fill opt/ratio via brute force");
    bench->add_flag("--deterministic", bench_deterministic, "derandomized solver variants");
    bench->add_flag("--assignments", bench_assignments, "include assignments in the CSV");
    bench->add_flag("--distinct-entries", bench_distinct, "loop-free random tuples");
    bench->add_flag("--paper-anchors", bench_paper, "mincut: constraint-pair anchors only");
    bench->add_option("--epsilon", bench_epsilon, "PTAS accuracy parameter (decimal)");
    bench->add_option("--cap", bench_cap, "brute-force evaluation cap");
    bench->add_option("--output", bench_output, "write the CSV here instead of stdout");

    // reduce
    std::string reduce_file, reduce_output;
    auto* reduce = app.add_subcommand("reduce", "pad the instance with |B| fresh elements");
    reduce->add_option("file", reduce_file, "problem file (JSON)")->required();
    reduce->add_option("--output", reduce_output, "write the problem here instead of stdout");

    // CLI11's vector overload consumes the arguments back to front.
    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (solve->parsed()) {
            solve_args.seed_given = seed_opt->count() > 0;
            const SolveReport report = run_solve(solve_args);
            write_output(io::report_to_json(report), solve_args.output, out);
        } else if (classify->parsed()) {
            const io::Problem problem = load_problem(classify_file);
            const auto cls = templates::classify_boolean(problem.templ);
            out << io::classification_to_json(problem.templ, cls);
        } else if (gallery->parsed()) {
            write_output(io::emit_problem(io::gallery_problem(gallery_name)), gallery_output, out);
        } else if (gen->parsed()) {
            harness::GenSpec spec;
            spec.templ = load_template(gen_template);
            spec.elements = gen_elements;
            spec.tuple_counts = gen_tuples;
            if (spec.tuple_counts.size() == 1)
                spec.tuple_counts.assign(
                    static_cast<size_t>(spec.templ.signature().relation_count()),
                    gen_tuples[0]);
            spec.seed = gen_seed;
            spec.distinct_entries = gen_distinct;
            io::Problem problem;
            problem.instance = harness::gen_instance(spec);
            problem.templ = spec.templ;
            problem.meta = io::ProblemMeta{"generated instance", gen_template};
            write_output(io::emit_problem(problem), gen_output, out);
        } else if (bench->parsed()) {
            harness::GenSpec base;
            base.templ = load_template(bench_template);
            base.elements = bench_elements;
            base.tuple_counts = bench_tuples;
            if (base.tuple_counts.size() == 1)
                base.tuple_counts.assign(
                    static_cast<size_t>(base.templ.signature().relation_count()),
                    bench_tuples[0]);
            base.distinct_entries = bench_distinct;
            std::vector<harness::GenSpec> specs;
            for (int i = 0; i < bench_instances; ++i) {
                harness::GenSpec spec = base;
                spec.seed = Rng::derive(bench_seed, static_cast<std::uint64_t>(i));
                specs.push_back(std::move(spec));
            }
            std::vector<std::string> modes;
            std::stringstream stream(bench_modes);
            std::string mode;
            while (std::getline(stream, mode, ','))
                if (!mode.empty()) modes.push_back(mode);
            harness::ExperimentOptions options;
            options.with_oracle = bench_oracle;
            options.include_assignments = bench_assignments;
            options.deterministic = bench_deterministic;
            options.paper_anchors = bench_paper;
            options.epsilon = parse_decimal(bench_epsilon);
            options.cap = bench_cap;
            const auto report = harness::run_experiment(specs, modes, options);
            write_output(harness::to_csv(report, bench_assignments), bench_output, out);
            for (const auto& summary : report.summary) {
                err << "# " << summary.mode << ": rows=" << summary.rows
                    << " with_ratio=" << summary.rows_with_ratio;
                if (summary.min_ratio) err << " min_ratio=" << to_decimal(*summary.min_ratio);
                if (summary.mean_ratio) err << " mean_ratio=" << to_decimal(*summary.mean_ratio);
                err << "\n";
            }
        } else if (reduce->parsed()) {
            io::Problem problem = load_problem(reduce_file);
            problem.instance = approx::pad_instance(problem.instance, problem.templ);
            write_output(io::emit_problem(problem), reduce_output, out);
        }
    } catch (const NoSurjection& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const NoSolution& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace surcsp::cli
