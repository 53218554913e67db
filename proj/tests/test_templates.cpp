#include "surcsp/templates.hpp"

#include "oracles.hpp"
#include "surcsp/exact.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace surcsp;
using namespace surcsp::templates;

TEST_CASE("build_cycle: tuple counts and membership") {
    const Structure c6 = build_cycle(6);
    CHECK(c6.size() == 6);
    CHECK(c6.tuples(0).size() == 12);
    CHECK(c6.contains(0, {0, 1}));
    CHECK(c6.contains(0, {1, 0}));
    CHECK(c6.contains(0, {5, 0}));
    CHECK(c6.contains(0, {0, 5}));
    CHECK_FALSE(c6.contains(0, {0, 2}));
    CHECK_FALSE(c6.contains(0, {0, 0}));

    const Structure c3 = build_cycle(3);
    CHECK(c3.tuples(0).size() == 6);  // every ordered pair of distinct values
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(c3.contains(0, {x, y}) == (x != y));

    const Structure c4 = build_cycle(4);
    CHECK(c4.tuples(0).size() == 8);
    for (const auto& missing : {std::vector<int>{0, 2}, {2, 0}, {1, 3}, {3, 1}})
        CHECK_FALSE(c4.contains(0, missing));
    for (int x = 0; x < 4; ++x) CHECK_FALSE(c4.contains(0, {x, x}));

    CHECK_THROWS_AS(build_cycle(2), InvalidArgument);
}

TEST_CASE("build_reflexive_cycle4: x-y mod 4 in {0,1}") {
    const Structure c4ref = build_reflexive_cycle4();
    CHECK(c4ref.tuples(0).size() == 8);
    CHECK(c4ref.contains(0, {1, 0}));
    CHECK_FALSE(c4ref.contains(0, {0, 1}));
    for (int x = 0; x < 4; ++x) CHECK(c4ref.contains(0, {x, x}));
}

TEST_CASE("build_no_rainbow: 27 minus 6 rainbow tuples") {
    const Structure nr = build_no_rainbow();
    CHECK(nr.tuples(0).size() == 21);
    CHECK(nr.contains(0, {0, 0, 2}));
    CHECK_FALSE(nr.contains(0, {0, 1, 2}));
    CHECK_FALSE(nr.contains(0, {2, 1, 0}));
    CHECK(nr.contains(0, {1, 1, 1}));
}

TEST_CASE("build_asymmetric_cut: equality and disjunction") {
    const Structure ac = build_asymmetric_cut();
    CHECK(ac.tuples(0).size() == 2);
    CHECK(ac.tuples(1).size() == 3);
    CHECK(ac.signature().relation(0).name == "eq");
    CHECK(ac.signature().relation(1).name == "or");
    CHECK_FALSE(ac.contains(1, {0, 0}));

    const Structure triangle(ac.signature(), 3, {{{0, 1}, {1, 2}, {0, 2}}, {}});
    CHECK(evaluate(triangle, ac, Assignment{0, 0, 0}).satisfied == 3);
}

TEST_CASE("build_hard_but_ptas: the five listed tuples") {
    const Structure hp = build_hard_but_ptas();
    CHECK(hp.tuples(0).size() == 5);
    CHECK(hp.contains(0, {0, 0, 0}));
    CHECK(hp.contains(0, {0, 1, 0}));
    CHECK_FALSE(hp.contains(0, {1, 1, 1}));

    const auto cls = classify_boolean(hp);
    CHECK(cls.zero_valid);
    CHECK_FALSE(cls.one_valid);
    CHECK_FALSE(cls.two_monotone);
}

TEST_CASE("classify_boolean: single positive conjunction") {
    const Structure templ(Signature({{"R", 2}}), 2, {{{1, 1}}});
    const auto cls = classify_boolean(templ);
    CHECK(cls.two_monotone);
    REQUIRE(cls.witnesses[0].has_value());
    CHECK(cls.witnesses[0]->positive == std::vector<int>{0, 1});
    CHECK_FALSE(cls.witnesses[0]->negative.has_value());
}

TEST_CASE("classify_boolean: XOR admits no witness") {
    const Structure templ(Signature({{"R", 2}}), 2, {{{0, 1}, {1, 0}}});
    const auto cls = classify_boolean(templ);
    CHECK_FALSE(cls.two_monotone);
    CHECK_FALSE(cls.zero_valid);
    CHECK_FALSE(cls.one_valid);
    CHECK_FALSE(cls.witnesses[0].has_value());
}

TEST_CASE("classify_boolean: equality is the canonical form-(c) relation") {
    // (x1 and x2) or (not y1 and not y2) generates exactly {(0,0),(1,1)}.
    const Structure templ(Signature({{"R", 2}}), 2, {{{0, 0}, {1, 1}}});
    const auto cls = classify_boolean(templ);
    CHECK(cls.two_monotone);
    REQUIRE(cls.witnesses[0].has_value());
    CHECK(cls.witnesses[0]->positive == std::vector<int>{0, 1});
    CHECK(cls.witnesses[0]->negative == std::vector<int>{0, 1});
}

TEST_CASE("classify_boolean: asym-cut template fails on the or relation") {
    const auto cls = classify_boolean(build_asymmetric_cut());
    CHECK_FALSE(cls.zero_valid);
    CHECK(cls.one_valid);
    CHECK_FALSE(cls.two_monotone);
    CHECK(cls.witnesses[0].has_value());        // eq has a witness
    CHECK_FALSE(cls.witnesses[1].has_value());  // or has none
}

TEST_CASE("classify_boolean rejects non-Boolean templates") {
    CHECK_THROWS_AS(classify_boolean(build_cycle(6)), InvalidArgument);
}

namespace {

Structure relation_from_bits(std::uint64_t bits, int arity) {
    std::vector<std::vector<int>> tuples;
    for (unsigned t = 0; t < (1u << arity); ++t) {
        if (!(bits & (std::uint64_t{1} << t))) continue;
        std::vector<int> tuple;
        for (int i = 0; i < arity; ++i) tuple.push_back((t >> i) & 1);
        tuples.push_back(std::move(tuple));
    }
    return Structure(Signature({{"R", arity}}), 2, {std::move(tuples)});
}

std::uint64_t regenerate(const templates::Witness& witness, int arity) {
    std::uint64_t bits = 0;
    for (unsigned t = 0; t < (1u << arity); ++t) {
        bool in = false;
        if (witness.positive) {
            bool all = true;
            for (int i : *witness.positive)
                if (!((t >> i) & 1)) all = false;
            if (all) in = true;
        }
        if (witness.negative) {
            bool all = true;
            for (int i : *witness.negative)
                if ((t >> i) & 1) all = false;
            if (all) in = true;
        }
        if (in) bits |= std::uint64_t{1} << t;
    }
    return bits;
}

}  // namespace

TEST_CASE("property: classify agrees with the image-set oracle, k <= 3") {
    for (int arity = 1; arity <= 3; ++arity) {
        const std::uint64_t relations = std::uint64_t{1} << (1 << arity);
        for (std::uint64_t bits = 0; bits < relations; ++bits) {
            const Structure templ = relation_from_bits(bits, arity);
            const auto cls = classify_boolean(templ);
            CHECK(cls.two_monotone == oracles::is_two_monotone_relation(bits, arity));
            if (cls.witnesses[0])
                CHECK(regenerate(*cls.witnesses[0], arity) == bits);  // witness round-trip
        }
    }
}

TEST_CASE("property: zero/one-valid templates satisfy constant assignments") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int arity = 1 + static_cast<int>(rng() % 3);
        const std::uint64_t bits = rng() & ((std::uint64_t{1} << (1 << arity)) - 1);
        const Structure templ = relation_from_bits(bits, arity);
        const auto cls = classify_boolean(templ);

        const int n = 2 + static_cast<int>(rng() % 5);
        std::set<std::vector<int>> tuples;
        for (int i = 0; i < 6; ++i) {
            std::vector<int> tuple;
            for (int j = 0; j < arity; ++j) tuple.push_back(static_cast<int>(rng() % n));
            tuples.insert(tuple);
        }
        const Structure instance(templ.signature(), n,
                                 {std::vector<std::vector<int>>(tuples.begin(), tuples.end())});
        const long long total = instance.total_tuple_count();
        if (cls.zero_valid)
            CHECK(evaluate(instance, templ, Assignment(static_cast<size_t>(n), 0)).satisfied ==
                  total);
        if (cls.one_valid)
            CHECK(evaluate(instance, templ, Assignment(static_cast<size_t>(n), 1)).satisfied ==
                  total);
    }
}

namespace {

Structure asym_instance(int n, std::vector<std::vector<int>> eq, std::vector<std::vector<int>> orr) {
    return Structure(build_asymmetric_cut().signature(), n, {std::move(eq), std::move(orr)});
}

}  // namespace

TEST_CASE("asym_cut_feasible: examples") {
    const Structure templ = build_asymmetric_cut();

    SUBCASE("two isolated elements") {
        const auto h = asym_cut_feasible(asym_instance(2, {}, {}));
        REQUIRE(h.has_value());
        CHECK(*h == Assignment{0, 1});
    }
    SUBCASE("single spanning component with an internal or-tuple") {
        const auto h = asym_cut_feasible(asym_instance(3, {{0, 1}, {1, 2}}, {{0, 2}}));
        CHECK_FALSE(h.has_value());
    }
    SUBCASE("dirty component {0,1}, clean component {2}") {
        const Structure instance = asym_instance(3, {{0, 1}}, {{0, 1}});
        const auto h = asym_cut_feasible(instance);
        REQUIRE(h.has_value());
        CHECK(*h == Assignment{1, 1, 0});
        CHECK(evaluate(instance, templ, *h).satisfied == instance.total_tuple_count());
        CHECK(is_surjective(*h, 2));
    }
    SUBCASE("one clean component spanning everything") {
        CHECK_FALSE(asym_cut_feasible(asym_instance(3, {{0, 1}, {1, 2}}, {})).has_value());
    }
    SUBCASE("singleton domain") {
        CHECK_FALSE(asym_cut_feasible(asym_instance(1, {}, {})).has_value());
    }
    SUBCASE("wrong signature") {
        CHECK_THROWS_AS(asym_cut_feasible(build_cycle(4)), SignatureMismatch);
    }
}

TEST_CASE("property: asym_cut_feasible decides perfect surjective solvability") {
    const Structure templ = build_asymmetric_cut();
    std::mt19937_64 rng(2468);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::set<std::vector<int>> eq, orr;
        const int eq_count = static_cast<int>(rng() % 5);
        const int or_count = static_cast<int>(rng() % 3);
        while (static_cast<int>(eq.size()) < eq_count)
            eq.insert({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        while (static_cast<int>(orr.size()) < or_count)
            orr.insert({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        const Structure instance = asym_instance(
            n, {eq.begin(), eq.end()}, {orr.begin(), orr.end()});

        const auto h = asym_cut_feasible(instance);
        const auto oracle = exact::brute_force(instance, templ, true);
        const bool perfect = oracle.value == instance.total_tuple_count();
        CHECK(h.has_value() == perfect);
        if (h) {
            CHECK(evaluate(instance, templ, *h).satisfied == instance.total_tuple_count());
            CHECK(is_surjective(*h, 2));
        }
    }
}
