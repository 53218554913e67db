#pragma once

#include "surcsp/errors.hpp"

#include <cstdint>
#include <random>

namespace surcsp {

// Seeded generator with a fixed, documented algorithm so that runs are
// bit-reproducible across platforms:
//   - the engine is std::mt19937_64, whose output sequence is pinned by the
//     C++ standard for a given seed;
//   - bounded draws use rejection sampling (accept the top region whose size
//     is a multiple of the bound), never a bare modulo;
//   - per-trial streams are derived with splitmix64(seed + (index+1)*GAMMA).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw InvalidArgument("Rng::below: bound must be positive");
        // 2^64 mod bound, computed in wrapping arithmetic.
        const std::uint64_t threshold = (0 - bound) % bound;
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return r % bound;
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // Independent stream for trial `index` of a run seeded with `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        return splitmix64(seed + index * 0x9E3779B97F4A7C15ULL);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace surcsp
