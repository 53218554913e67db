#include "surcsp/templates.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace surcsp::templates {

Structure build_cycle(int n) {
    if (n < 3) throw InvalidArgument("build_cycle: n must be >= 3");
    std::vector<std::vector<int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = ((x - y) % n + n) % n;
            if (d == 1 || d == n - 1) edges.push_back({x, y});
        }
    return Structure(Signature({{"R", 2}}), n, {std::move(edges)});
}

Structure build_reflexive_cycle4() {
    std::vector<std::vector<int>> edges;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int d = ((x - y) % 4 + 4) % 4;
            if (d == 0 || d == 1) edges.push_back({x, y});
        }
    return Structure(Signature({{"R", 2}}), 4, {std::move(edges)});
}

Structure build_no_rainbow() {
    std::vector<std::vector<int>> triples;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                if (x == y || y == z || x == z) triples.push_back({x, y, z});
    return Structure(Signature({{"R", 3}}), 3, {std::move(triples)});
}

Structure build_asymmetric_cut() {
    return Structure(Signature({{"eq", 2}, {"or", 2}}), 2,
                     {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}, {1, 1}}});
}

Structure build_hard_but_ptas() {
    return Structure(Signature({{"R", 3}}), 2,
                     {{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {0, 1, 0}}});
}

namespace {

// Tuples of a Boolean k-ary relation encoded as k-bit masks (bit i = t_i).
std::uint64_t encode_relation(const Structure& templ, int relation) {
    std::uint64_t bits = 0;
    for (const auto& tuple : templ.tuples(relation)) {
        unsigned code = 0;
        for (size_t i = 0; i < tuple.size(); ++i)
            if (tuple[i]) code |= 1u << i;
        bits |= std::uint64_t{1} << code;
    }
    return bits;
}

std::uint64_t witness_relation(int arity, std::optional<unsigned> p_mask,
                               std::optional<unsigned> q_mask) {
    std::uint64_t bits = 0;
    for (unsigned t = 0; t < (1u << arity); ++t) {
        bool in = false;
        if (p_mask && (t & *p_mask) == *p_mask) in = true;
        if (q_mask && (t & *q_mask) == 0) in = true;
        if (in) bits |= std::uint64_t{1} << t;
    }
    return bits;
}

std::vector<int> mask_to_positions(unsigned mask, int arity) {
    std::vector<int> out;
    for (int i = 0; i < arity; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

std::optional<Witness> find_witness(const Structure& templ, int relation) {
    const int k = templ.signature().relation(relation).arity;
    if (k > 16) throw InvalidArgument("classify_boolean: arity above 16 not supported");
    const std::uint64_t target = encode_relation(templ, relation);
    const unsigned limit = 1u << k;
    // Canonical order: P in {absent, 0, 1, ..., 2^k-1}, then Q likewise;
    // the (absent, absent) pair denotes no constraint and is skipped.
    for (int p = -1; p < static_cast<int>(limit); ++p) {
        for (int q = -1; q < static_cast<int>(limit); ++q) {
            if (p < 0 && q < 0) continue;
            std::optional<unsigned> p_mask, q_mask;
            if (p >= 0) p_mask = static_cast<unsigned>(p);
            if (q >= 0) q_mask = static_cast<unsigned>(q);
            if (witness_relation(k, p_mask, q_mask) != target) continue;
            Witness w;
            if (p_mask) w.positive = mask_to_positions(*p_mask, k);
            if (q_mask) w.negative = mask_to_positions(*q_mask, k);
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

BooleanClass classify_boolean(const Structure& templ) {
    if (templ.size() != 2)
        throw InvalidArgument("classify_boolean: template domain must be {0,1}, got size " +
                              std::to_string(templ.size()));
    BooleanClass out;
    out.zero_valid = true;
    out.one_valid = true;
    out.two_monotone = true;
    for (int r = 0; r < templ.signature().relation_count(); ++r) {
        const int k = templ.signature().relation(r).arity;
        if (!templ.contains(r, std::vector<int>(static_cast<size_t>(k), 0))) out.zero_valid = false;
        if (!templ.contains(r, std::vector<int>(static_cast<size_t>(k), 1))) out.one_valid = false;
        auto witness = find_witness(templ, r);
        if (!witness) out.two_monotone = false;
        out.witnesses.push_back(std::move(witness));
    }
    return out;
}

std::optional<Assignment> asym_cut_feasible(const Structure& instance) {
    const Structure reference = build_asymmetric_cut();
    if (instance.signature() != reference.signature())
        throw SignatureMismatch("asym_cut_feasible: instance is not over the eq/or signature");

    const int n = instance.size();
    if (n < 2) return std::nullopt;

    // Union-find over eq-edges.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    const int eq = instance.signature().index_of("eq");
    const int orr = instance.signature().index_of("or");
    for (const auto& tuple : instance.tuples(eq)) {
        int a = find(tuple[0]), b = find(tuple[1]);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }

    // A component is dirty when some or-tuple lies entirely inside it.
    std::vector<bool> dirty(static_cast<size_t>(n), false);
    for (const auto& tuple : instance.tuples(orr))
        if (find(tuple[0]) == find(tuple[1])) dirty[static_cast<size_t>(find(tuple[0]))] = true;

    std::vector<int> component_size(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e) ++component_size[static_cast<size_t>(find(e))];

    // Roots are component minima, so scanning by root index picks the
    // lowest-indexed qualifying component.
    for (int root = 0; root < n; ++root) {
        if (find(root) != root) continue;
        if (dirty[static_cast<size_t>(root)]) continue;
        if (component_size[static_cast<size_t>(root)] == n) continue;  // would not be surjective
        Assignment h(static_cast<size_t>(n), 1);
        for (int e = 0; e < n; ++e)
            if (find(e) == root) h[static_cast<size_t>(e)] = 0;
        return h;
    }
    return std::nullopt;
}

}  // namespace surcsp::templates
