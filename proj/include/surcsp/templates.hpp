#pragma once

#include "surcsp/core.hpp"

#include <optional>
#include <vector>

namespace surcsp::templates {

// Cycle template on {0..n-1}: one binary relation {(x,y) : x-y mod n = +-1}.
// build_cycle(6) is the hexagon used throughout the gallery.
Structure build_cycle(int n);

// Reflexive 4-cycle on {0,1,2,3}: {(x,y) : x-y mod 4 = 1 or 0}, 8 tuples.
Structure build_reflexive_cycle4();

// {0,1,2}^3 minus the six all-distinct ("rainbow") tuples, 21 tuples.
Structure build_no_rainbow();

// Boolean template with eq = {(0,0),(1,1)} and or = {(0,1),(1,0),(1,1)}.
Structure build_asymmetric_cut();

// Boolean ternary relation {(0,0,0),(0,1,1),(1,0,1),(1,1,0),(0,1,0)}:
// 0-valid, hence easy without surjectivity, yet surjectively hard.
Structure build_hard_but_ptas();

// A 2-monotone witness: R = {t : (all positions in `positive` are 1) or
// (all positions in `negative` are 0)}, with each side optional (an absent
// side contributes nothing; an empty present side is the full relation).
// Positions are 0-based coordinate indices.
struct Witness {
    std::optional<std::vector<int>> positive;
    std::optional<std::vector<int>> negative;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct BooleanClass {
    bool zero_valid = false;
    bool one_valid = false;
    bool two_monotone = false;
    // One entry per relation; engaged iff that relation has a witness.
    std::vector<std::optional<Witness>> witnesses;
};

// Classifies a Boolean template: 0-valid / 1-valid membership of the
// all-constant tuples, and 2-monotonicity by exhaustive witness enumeration
// (first regenerating (P,Q) in canonical order wins).
BooleanClass classify_boolean(const Structure& templ);

// Decision procedure for perfect surjective solutions over the
// asymmetric-cut template: returns an all-satisfying surjective assignment
// when some eq-connected component is free of internal or-tuples and does
// not swallow the whole domain, absent otherwise.
std::optional<Assignment> asym_cut_feasible(const Structure& instance);

}  // namespace surcsp::templates
