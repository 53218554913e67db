#pragma once

#include "surcsp/core.hpp"
#include "surcsp/report.hpp"
#include "surcsp/templates.hpp"

#include <optional>
#include <vector>

namespace surcsp::exact {

inline constexpr long long kDefaultBruteForceCap = 20'000'000;

// Exhaustive optimum over all (optionally surjective) assignments.
// Enumerates assignments in lexicographic order; ties keep the first, i.e.
// the lexicographically smallest maximizer. Throws CapExceeded when
// |B|^|A| > cap and NoSurjection when surjective and |A| < |B|.
SolveReport brute_force(const Structure& instance, const Structure& templ, bool surjective,
                        long long cap = kDefaultBruteForceCap);

// Directed flow network with integer capacities. By convention of the cut
// gadget, nodes 0..variable_count-1 are instance variables; source and sink
// are the F and T poles.
struct FlowNetwork {
    struct Arc {
        int from = 0;
        int to = 0;
        long long capacity = 0;
    };

    int node_count = 0;
    int source = 0;
    int sink = 0;
    int variable_count = 0;
    long long infinity = 0;  // sentinel: total constraint count + 1
    std::vector<Arc> arcs;

    void add_arc(int from, int to, long long capacity);
};

struct CutSolution {
    long long cut_value = 0;
    // sink_side[v] = true iff v still reaches the sink in the residual
    // graph; limbo nodes land on the F side.
    std::vector<bool> sink_side;
    // Variable nodes on the sink side map to 1, the rest to 0.
    Assignment assignment;
};

// Edmonds-Karp: shortest augmenting paths until none remains, then the cut
// is read off the residual graph. Deterministic for a fixed arc order.
CutSolution max_flow(const FlowNetwork& net);

// Anchor for the surjectivity forcing: either a constraint (global index
// over relations in signature order, tuples in stored order) whose witness
// disjunct gets an infinite-cost arc, or a variable pinned to a value.
struct Anchor {
    enum class Kind { Constraint, Variable };
    Kind kind = Kind::Constraint;
    int index = 0;

    static Anchor constraint(int i) { return {Kind::Constraint, i}; }
    static Anchor variable(int i) { return {Kind::Variable, i}; }
};

// Builds the min-cut gadget for a 2-monotone instance: one gadget node per
// positive/negative witness disjunct, infinite arcs tying variables to the
// gadget, unit arcs whose cut corresponds to violating the constraint.
// anchor1 forces a 1 (constraint selected as C' or variable pinned to 1),
// anchor0 forces a 0.
FlowNetwork build_cut_graph(const Structure& instance, const templates::BooleanClass& cls,
                            const std::optional<Anchor>& anchor1,
                            const std::optional<Anchor>& anchor0);

enum class AnchorMode {
    // Enumerate (C', C'') constraint pairs only, as in the source analysis.
    Paper,
    // Constraint pairs plus all (u=1, v=0) variable pairs; complete.
    Extended,
};

// Exact Max-Sur-CSP for 2-monotone Boolean templates: enumerate anchor
// pairs, solve a min cut per pair, decode, and keep the best surjective
// assignment. Extended mode is authoritative; Paper mode throws NoSolution
// when the constraint-pair pool is empty.
SolveReport two_monotone_solve(const Structure& instance, const Structure& templ,
                               AnchorMode mode = AnchorMode::Extended);

// Plain Max-CSP optimum for 2-monotone templates: the same gadget with no
// anchors, where the decoded assignment need not be surjective.
SolveReport two_monotone_max_csp(const Structure& instance, const Structure& templ);

}  // namespace surcsp::exact
