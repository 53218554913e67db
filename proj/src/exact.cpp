#include "surcsp/exact.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace surcsp::exact {

namespace {

// Membership tables per relation for the brute-force hot loop: dense bitmap
// over value codes when |B|^k is small, binary search otherwise.
struct RelationLookup {
    int arity = 0;
    bool dense = false;
    std::vector<bool> table;
    const Structure* templ = nullptr;
    int relation = 0;

    bool contains(const std::vector<int>& image, int template_size) const {
        if (!dense) return templ->contains(relation, image);
        long long code = 0;
        for (int v : image) code = code * template_size + v;
        return table[static_cast<size_t>(code)];
    }
};

RelationLookup make_lookup(const Structure& templ, int relation) {
    RelationLookup lookup;
    lookup.arity = templ.signature().relation(relation).arity;
    lookup.templ = &templ;
    lookup.relation = relation;
    long long space = 1;
    bool small = true;
    for (int i = 0; i < lookup.arity; ++i) {
        space *= templ.size();
        if (space > (1 << 22)) {
            small = false;
            break;
        }
    }
    if (small) {
        lookup.dense = true;
        lookup.table.assign(static_cast<size_t>(space), false);
        for (const auto& tuple : templ.tuples(relation)) {
            long long code = 0;
            for (int v : tuple) code = code * templ.size() + v;
            lookup.table[static_cast<size_t>(code)] = true;
        }
    }
    return lookup;
}

}  // namespace

SolveReport brute_force(const Structure& instance, const Structure& templ, bool surjective,
                        long long cap) {
    validate(instance, templ, surjective);
    if (cap < 1) throw InvalidArgument("brute_force: cap must be positive");

    const int n = instance.size();
    const int b = templ.size();

    long long space = 1;
    for (int i = 0; i < n; ++i) {
        if (space > cap / b) {
            throw CapExceeded("brute_force: |B|^|A| = " + std::to_string(b) + "^" +
                              std::to_string(n) + " exceeds cap " + std::to_string(cap));
        }
        space *= b;
    }

    std::vector<RelationLookup> lookups;
    for (int r = 0; r < templ.signature().relation_count(); ++r)
        lookups.push_back(make_lookup(templ, r));

    Assignment h(static_cast<size_t>(n), 0);
    std::vector<int> image;

    // Value-usage counts kept incrementally so the surjectivity test is O(1).
    std::vector<long long> used(static_cast<size_t>(b), 0);
    int values_missing = b;
    if (n > 0) {
        used[0] = n;
        values_missing = b - 1;
    }

    long long best_value = -1;
    Assignment best;
    long long enumerated = 0;

    while (true) {
        ++enumerated;
        if (!surjective || values_missing == 0) {
            long long satisfied = 0;
            for (int r = 0; r < instance.signature().relation_count(); ++r) {
                const auto& lookup = lookups[static_cast<size_t>(r)];
                for (const auto& tuple : instance.tuples(r)) {
                    image.assign(tuple.size(), 0);
                    for (size_t j = 0; j < tuple.size(); ++j)
                        image[j] = h[static_cast<size_t>(tuple[j])];
                    if (lookup.contains(image, b)) ++satisfied;
                }
            }
            if (satisfied > best_value) {
                best_value = satisfied;
                best = h;
            }
        }
        // Lexicographic odometer, last position fastest.
        int pos = n - 1;
        while (pos >= 0) {
            int old = h[static_cast<size_t>(pos)];
            if (--used[static_cast<size_t>(old)] == 0) ++values_missing;
            if (old + 1 < b) {
                h[static_cast<size_t>(pos)] = old + 1;
                if (used[static_cast<size_t>(old + 1)]++ == 0) --values_missing;
                break;
            }
            h[static_cast<size_t>(pos)] = 0;
            if (used[0]++ == 0) --values_missing;
            --pos;
        }
        if (pos < 0) break;
    }

    if (best_value < 0)
        throw NoSolution("brute_force: no feasible assignment");  // unreachable given validate

    SolveReport report;
    report.assignment = std::move(best);
    report.value = best_value;
    report.mode = surjective ? "exact-sur" : "exact";
    report.choices_enumerated = enumerated;
    RatioBound bound;
    bound.k_max = templ.signature().max_arity();
    bound.template_size = b;
    bound.ratio = Rational(1);
    report.guarantee = bound;
    return report;
}

void FlowNetwork::add_arc(int from, int to, long long capacity) {
    if (from == to) throw InvalidArgument("flow network: self-loop arc");
    if (from < 0 || from >= node_count || to < 0 || to >= node_count)
        throw InvalidArgument("flow network: arc endpoint out of range");
    if (capacity < 0) throw InvalidArgument("flow network: negative capacity");
    arcs.push_back({from, to, capacity});
}

CutSolution max_flow(const FlowNetwork& net) {
    const int n = net.node_count;
    struct Edge {
        int to;
        long long capacity;
        int rev;
    };
    std::vector<std::vector<Edge>> graph(static_cast<size_t>(n));
    for (const auto& arc : net.arcs) {
        graph[static_cast<size_t>(arc.from)].push_back(
            {arc.to, arc.capacity, static_cast<int>(graph[static_cast<size_t>(arc.to)].size())});
        graph[static_cast<size_t>(arc.to)].push_back(
            {arc.from, 0, static_cast<int>(graph[static_cast<size_t>(arc.from)].size()) - 1});
    }

    long long flow = 0;
    std::vector<int> prev_node(static_cast<size_t>(n));
    std::vector<int> prev_edge(static_cast<size_t>(n));
    while (true) {
        // BFS for a shortest augmenting path.
        std::fill(prev_node.begin(), prev_node.end(), -1);
        prev_node[static_cast<size_t>(net.source)] = net.source;
        std::deque<int> queue{net.source};
        while (!queue.empty() && prev_node[static_cast<size_t>(net.sink)] < 0) {
            int u = queue.front();
            queue.pop_front();
            for (size_t i = 0; i < graph[static_cast<size_t>(u)].size(); ++i) {
                const Edge& e = graph[static_cast<size_t>(u)][i];
                if (e.capacity > 0 && prev_node[static_cast<size_t>(e.to)] < 0) {
                    prev_node[static_cast<size_t>(e.to)] = u;
                    prev_edge[static_cast<size_t>(e.to)] = static_cast<int>(i);
                    queue.push_back(e.to);
                }
            }
        }
        if (prev_node[static_cast<size_t>(net.sink)] < 0) break;

        long long push = std::numeric_limits<long long>::max();
        for (int v = net.sink; v != net.source; v = prev_node[static_cast<size_t>(v)]) {
            const Edge& e =
                graph[static_cast<size_t>(prev_node[static_cast<size_t>(v)])][static_cast<size_t>(
                    prev_edge[static_cast<size_t>(v)])];
            push = std::min(push, e.capacity);
        }
        for (int v = net.sink; v != net.source; v = prev_node[static_cast<size_t>(v)]) {
            Edge& e =
                graph[static_cast<size_t>(prev_node[static_cast<size_t>(v)])][static_cast<size_t>(
                    prev_edge[static_cast<size_t>(v)])];
            e.capacity -= push;
            graph[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].capacity += push;
        }
        flow += push;
    }

    // Sink side = nodes that still reach the sink through residual arcs;
    // limbo nodes deliberately land on the F side.
    std::vector<bool> reaches_sink(static_cast<size_t>(n), false);
    reaches_sink[static_cast<size_t>(net.sink)] = true;
    std::deque<int> queue{net.sink};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        // u reaches v iff the residual arc u->v has capacity; that arc is
        // stored as the reverse companion of some edge out of v.
        for (const Edge& e : graph[static_cast<size_t>(v)]) {
            int u = e.to;
            const Edge& forward = graph[static_cast<size_t>(u)][static_cast<size_t>(e.rev)];
            if (forward.capacity > 0 && !reaches_sink[static_cast<size_t>(u)]) {
                reaches_sink[static_cast<size_t>(u)] = true;
                queue.push_back(u);
            }
        }
    }

    CutSolution solution;
    solution.cut_value = flow;
    solution.sink_side = std::move(reaches_sink);
    solution.assignment.assign(static_cast<size_t>(net.variable_count), 0);
    for (int v = 0; v < net.variable_count; ++v)
        if (solution.sink_side[static_cast<size_t>(v)]) solution.assignment[static_cast<size_t>(v)] = 1;
    return solution;
}

namespace {

// Flattened view of one constraint: its witness applied to its tuple.
struct Gadget {
    std::vector<int> ones;   // variables that must be 1 for the positive disjunct
    std::vector<int> zeros;  // variables that must be 0 for the negative disjunct
    bool has_positive = false;
    bool has_negative = false;
};

std::vector<Gadget> collect_gadgets(const Structure& instance,
                                    const templates::BooleanClass& cls) {
    if (!cls.two_monotone)
        throw NotTwoMonotone("build_cut_graph: template is not 2-monotone");
    if (cls.witnesses.size() != static_cast<size_t>(instance.signature().relation_count()))
        throw InvalidArgument("build_cut_graph: witness list does not match signature");

    std::vector<Gadget> gadgets;
    for (int r = 0; r < instance.signature().relation_count(); ++r) {
        const auto& witness = cls.witnesses[static_cast<size_t>(r)];
        if (!witness)
            throw NotTwoMonotone("build_cut_graph: relation '" +
                                 instance.signature().relation(r).name + "' has no witness");
        for (const auto& tuple : instance.tuples(r)) {
            Gadget g;
            if (witness->positive) {
                g.has_positive = true;
                for (int pos : *witness->positive) g.ones.push_back(tuple[static_cast<size_t>(pos)]);
                std::sort(g.ones.begin(), g.ones.end());
                g.ones.erase(std::unique(g.ones.begin(), g.ones.end()), g.ones.end());
            }
            if (witness->negative) {
                g.has_negative = true;
                for (int pos : *witness->negative) g.zeros.push_back(tuple[static_cast<size_t>(pos)]);
                std::sort(g.zeros.begin(), g.zeros.end());
                g.zeros.erase(std::unique(g.zeros.begin(), g.zeros.end()), g.zeros.end());
            }
            gadgets.push_back(std::move(g));
        }
    }
    return gadgets;
}

}  // namespace

FlowNetwork build_cut_graph(const Structure& instance, const templates::BooleanClass& cls,
                            const std::optional<Anchor>& anchor1,
                            const std::optional<Anchor>& anchor0) {
    auto gadgets = collect_gadgets(instance, cls);
    const int n = instance.size();
    const long long constraint_count = static_cast<long long>(gadgets.size());
    const long long infinity = constraint_count + 1;

    if (anchor1 && anchor1->kind == Anchor::Kind::Constraint) {
        int c = anchor1->index;
        if (c < 0 || c >= constraint_count)
            throw InvalidArgument("anchor1: constraint index out of range");
        if (!gadgets[static_cast<size_t>(c)].has_positive)
            throw InvalidArgument("anchor1: constraint has no positive disjunct");
    }
    if (anchor0 && anchor0->kind == Anchor::Kind::Constraint) {
        int c = anchor0->index;
        if (c < 0 || c >= constraint_count)
            throw InvalidArgument("anchor0: constraint index out of range");
        if (!gadgets[static_cast<size_t>(c)].has_negative)
            throw InvalidArgument("anchor0: constraint has no negative disjunct");
    }
    auto is_variable_anchor = [n](const std::optional<Anchor>& a) {
        if (a && a->kind == Anchor::Kind::Variable) {
            if (a->index < 0 || a->index >= n)
                throw InvalidArgument("variable anchor out of range");
            return true;
        }
        return false;
    };
    const bool var1 = is_variable_anchor(anchor1);
    const bool var0 = is_variable_anchor(anchor0);
    if (var1 && var0 && anchor1->index == anchor0->index)
        throw InvalidArgument("variable anchors must name distinct variables");

    FlowNetwork net;
    net.variable_count = n;
    net.source = n;      // F
    net.sink = n + 1;    // T
    net.node_count = n + 2;
    net.infinity = infinity;

    auto anchored = [](const std::optional<Anchor>& a, int constraint) {
        return a && a->kind == Anchor::Kind::Constraint && a->index == constraint;
    };

    for (int c = 0; c < constraint_count; ++c) {
        const Gadget& g = gadgets[static_cast<size_t>(c)];
        const bool as_one = anchored(anchor1, c);
        const bool as_zero = anchored(anchor0, c);
        int positive_node = -1, negative_node = -1;
        if (g.has_positive) {
            positive_node = net.node_count++;
            for (int x : g.ones) net.arcs.push_back({x, positive_node, infinity});
        }
        if (g.has_negative) {
            negative_node = net.node_count++;
            for (int y : g.zeros) net.arcs.push_back({negative_node, y, infinity});
        }
        if (g.has_positive && !g.has_negative) {
            net.arcs.push_back({positive_node, net.sink, as_one ? infinity : 1});
        } else if (g.has_negative && !g.has_positive) {
            net.arcs.push_back({net.source, negative_node, as_zero ? infinity : 1});
        } else {
            if (as_one && as_zero) {
                net.arcs.push_back({positive_node, net.sink, infinity});
                net.arcs.push_back({net.source, negative_node, infinity});
            } else if (as_one) {
                net.arcs.push_back({positive_node, net.sink, infinity});
            } else if (as_zero) {
                net.arcs.push_back({net.source, negative_node, infinity});
            } else {
                net.arcs.push_back({positive_node, negative_node, 1});
            }
        }
    }

    if (var1) net.arcs.push_back({anchor1->index, net.sink, infinity});
    if (var0) net.arcs.push_back({net.source, anchor0->index, infinity});
    return net;
}

namespace {

SolveReport finish_exact_report(const Structure& instance, const Structure& templ,
                                Assignment best, std::string mode, long long enumerated) {
    SolveReport report;
    report.value = evaluate(instance, templ, best).satisfied;
    report.assignment = std::move(best);
    report.mode = std::move(mode);
    report.choices_enumerated = enumerated;
    RatioBound bound;
    bound.k_max = templ.signature().max_arity();
    bound.template_size = templ.size();
    bound.ratio = Rational(1);
    report.guarantee = bound;
    return report;
}

}  // namespace

SolveReport two_monotone_solve(const Structure& instance, const Structure& templ,
                               AnchorMode mode) {
    validate(instance, templ, true);
    auto cls = templates::classify_boolean(templ);
    if (!cls.two_monotone) throw NotTwoMonotone("two_monotone_solve: template is not 2-monotone");
    if (instance.size() < 2)
        throw NoSurjection("two_monotone_solve: |A| = " + std::to_string(instance.size()) +
                           " < 2");

    // Constraint pools, indexed globally over relations/tuples in order.
    std::vector<int> positive_pool, negative_pool;
    {
        int c = 0;
        for (int r = 0; r < instance.signature().relation_count(); ++r) {
            const auto& witness = cls.witnesses[static_cast<size_t>(r)];
            for (size_t t = 0; t < instance.tuples(r).size(); ++t, ++c) {
                if (witness->positive) positive_pool.push_back(c);
                if (witness->negative) negative_pool.push_back(c);
            }
        }
    }

    std::vector<std::pair<std::optional<Anchor>, std::optional<Anchor>>> pairs;
    for (int c1 : positive_pool)
        for (int c0 : negative_pool)
            pairs.emplace_back(Anchor::constraint(c1), Anchor::constraint(c0));
    if (mode == AnchorMode::Extended) {
        for (int u = 0; u < instance.size(); ++u)
            for (int v = 0; v < instance.size(); ++v)
                if (u != v) pairs.emplace_back(Anchor::variable(u), Anchor::variable(v));
    }
    if (pairs.empty())
        throw NoSolution(
            "two_monotone_solve: no anchorable constraint pair; rerun in extended mode");

    long long best_value = -1;
    Assignment best;
    long long tried = 0;
    for (const auto& [anchor1, anchor0] : pairs) {
        FlowNetwork net = build_cut_graph(instance, cls, anchor1, anchor0);
        CutSolution cut = max_flow(net);
        ++tried;
        if (cut.cut_value >= net.infinity) continue;  // contradictory forcing
        if (!is_surjective(cut.assignment, templ.size())) continue;
        long long value = evaluate(instance, templ, cut.assignment).satisfied;
        if (value > best_value) {
            best_value = value;
            best = cut.assignment;
        }
    }
    if (best_value < 0)
        throw NoSolution("two_monotone_solve: no anchor pair produced a surjective assignment");

    return finish_exact_report(instance, templ, std::move(best),
                               mode == AnchorMode::Paper ? "mincut-paper" : "mincut", tried);
}

SolveReport two_monotone_max_csp(const Structure& instance, const Structure& templ) {
    validate(instance, templ, false);
    auto cls = templates::classify_boolean(templ);
    if (!cls.two_monotone)
        throw NotTwoMonotone("two_monotone_max_csp: template is not 2-monotone");
    FlowNetwork net = build_cut_graph(instance, cls, std::nullopt, std::nullopt);
    CutSolution cut = max_flow(net);
    return finish_exact_report(instance, templ, std::move(cut.assignment), "mincut-maxcsp", 1);
}

}  // namespace surcsp::exact
