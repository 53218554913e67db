// Test-only independent oracles. These deliberately take different
// algorithmic routes than the library so they can catch its mistakes.
#pragma once

#include "surcsp/core.hpp"
#include "surcsp/exact.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

// Tuple-set bitmask of a Boolean relation: bit t set iff the tuple whose
// i-th entry is bit i of t belongs to the relation.
inline std::uint64_t relation_bits(const surcsp::Structure& templ, int relation) {
    std::uint64_t bits = 0;
    for (const auto& tuple : templ.tuples(relation)) {
        unsigned code = 0;
        for (size_t i = 0; i < tuple.size(); ++i)
            if (tuple[i]) code |= 1u << i;
        bits |= std::uint64_t{1} << code;
    }
    return bits;
}

// Every relation expressible as a positive cone, a zero cone, or their
// union, precomputed once per arity. Classification is then membership.
inline const std::set<std::uint64_t>& two_monotone_images(int arity) {
    static std::set<std::uint64_t> cache[17];
    auto& image = cache[arity];
    if (!image.empty()) return image;
    const int limit = 1 << arity;
    for (int p = -1; p < limit; ++p) {
        for (int q = -1; q < limit; ++q) {
            if (p < 0 && q < 0) continue;
            std::uint64_t bits = 0;
            for (int t = 0; t < limit; ++t) {
                const bool pos = p >= 0 && (t & p) == p;
                const bool neg = q >= 0 && (t & q) == 0;
                if (pos || neg) bits |= std::uint64_t{1} << t;
            }
            image.insert(bits);
        }
    }
    return image;
}

inline bool is_two_monotone_relation(std::uint64_t bits, int arity) {
    return two_monotone_images(arity).count(bits) > 0;
}

// Minimum s-t cut by enumerating every sink-side subset (source fixed on
// the source side, sink on the sink side).
inline long long brute_min_cut(const surcsp::exact::FlowNetwork& net) {
    const int n = net.node_count;
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (v != net.source && v != net.sink) movable.push_back(v);

    long long best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << movable.size()); ++mask) {
        std::vector<bool> sink_side(static_cast<size_t>(n), false);
        sink_side[static_cast<size_t>(net.sink)] = true;
        for (size_t i = 0; i < movable.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) sink_side[static_cast<size_t>(movable[i])] = true;
        long long cost = 0;
        for (const auto& arc : net.arcs)
            if (!sink_side[static_cast<size_t>(arc.from)] && sink_side[static_cast<size_t>(arc.to)])
                cost += arc.capacity;
        if (best < 0 || cost < best) best = cost;
    }
    return best;
}

}  // namespace oracles
