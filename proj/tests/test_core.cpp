#include "surcsp/core.hpp"
#include "surcsp/templates.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace surcsp;

namespace {

// Equality triangle over the asym-cut signature: eq-tuples on all pairs.
Structure triangle_instance() {
    return Structure(Signature({{"eq", 2}, {"or", 2}}), 3, {{{0, 1}, {1, 2}, {0, 2}}, {}});
}

// Test-only satisfaction count written directly from the definition, used
// as an independent oracle for evaluate().
long long oracle_satisfied(const Structure& instance, const Structure& templ,
                           const Assignment& h) {
    long long count = 0;
    for (int r = 0; r < instance.signature().relation_count(); ++r)
        for (const auto& tuple : instance.tuples(r)) {
            std::vector<int> image;
            for (int e : tuple) image.push_back(h[static_cast<size_t>(e)]);
            for (const auto& allowed : templ.tuples(r))
                if (allowed == image) {
                    ++count;
                    break;
                }
        }
    return count;
}

}  // namespace

TEST_CASE("evaluate: C6 as its own instance under the identity") {
    const Structure c6 = templates::build_cycle(6);
    Assignment identity{0, 1, 2, 3, 4, 5};
    const auto result = evaluate(c6, c6, identity);
    CHECK(result.satisfied == 12);
    REQUIRE(result.per_relation.size() == 1);
    CHECK(result.per_relation[0].satisfied == 12);
    CHECK(result.per_relation[0].total == 12);
}

TEST_CASE("evaluate: instance without tuples") {
    const Structure c6 = templates::build_cycle(6);
    const Structure empty(c6.signature(), 4, {{}});
    CHECK(evaluate(empty, c6, Assignment{0, 0, 0, 0}).satisfied == 0);
}

TEST_CASE("evaluate: equality triangle, frozen against the hand oracle") {
    const Structure instance = triangle_instance();
    const Structure templ = templates::build_asymmetric_cut();

    // All 8 Boolean assignments through the independent oracle: a constant
    // map satisfies all three equalities, one odd element satisfies one.
    for (int bits = 0; bits < 8; ++bits) {
        Assignment h{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
        const long long expected = oracle_satisfied(instance, templ, h);
        CHECK(evaluate(instance, templ, h).satisfied == expected);
    }
    CHECK(evaluate(instance, templ, Assignment{0, 0, 1}).satisfied == 1);
    CHECK(evaluate(instance, templ, Assignment{0, 0, 0}).satisfied == 3);
}

TEST_CASE("evaluate: error paths") {
    const Structure c6 = templates::build_cycle(6);
    const Structure other(Signature({{"S", 2}}), 6, {{}});
    CHECK_THROWS_AS(evaluate(other, c6, Assignment(6, 0)), SignatureMismatch);
    CHECK_THROWS_AS(evaluate(c6, c6, Assignment(5, 0)), InvalidArgument);
    CHECK_THROWS_AS(evaluate(c6, c6, Assignment(6, 6)), InvalidArgument);
}

TEST_CASE("is_surjective basics") {
    CHECK(is_surjective({0, 1, 0}, 2));
    CHECK_FALSE(is_surjective({1, 1, 1}, 2));
    CHECK(is_surjective({0, 1, 2}, 3));
    CHECK_FALSE(is_surjective({}, 1));
}

TEST_CASE("degree counts occurrences with multiplicity") {
    const Structure instance = triangle_instance();
    CHECK(degree(instance, 1) == 2);
    CHECK(degree(instance, 0) == 2);

    const Structure lonely(Signature({{"R", 2}}), 7, {{{5, 5}}});
    CHECK(degree(lonely, 5) == 2);
    CHECK(degree(lonely, 3) == 0);
    CHECK_THROWS_AS(degree(lonely, 7), InvalidArgument);
    CHECK_THROWS_AS(degree(lonely, -1), InvalidArgument);
}

TEST_CASE("validate: surjective feasibility and signature matching") {
    const Structure templ = templates::build_asymmetric_cut();
    const Structure tiny(templ.signature(), 1, {{}, {}});
    CHECK_THROWS_AS(validate(tiny, templ, true), NoSurjection);
    CHECK_NOTHROW(validate(tiny, templ, false));

    const Structure two(templ.signature(), 2, {{}, {}});
    CHECK_NOTHROW(validate(two, templ, true));

    const Structure renamed(Signature({{"eq", 2}, {"nor", 2}}), 3, {{}, {}});
    CHECK_THROWS_AS(validate(renamed, templ, true), SignatureMismatch);
}

TEST_CASE("structure construction rejects bad tuples") {
    const Signature sig({{"R", 2}});
    CHECK_THROWS_AS(Structure(sig, 3, {{{0, 3}}}), InvalidArgument);      // out of range
    CHECK_THROWS_AS(Structure(sig, 3, {{{0, -1}}}), InvalidArgument);     // negative
    CHECK_THROWS_AS(Structure(sig, 3, {{{0, 1}, {0, 1}}}), InvalidArgument);  // duplicate
    CHECK_THROWS_AS(Structure(sig, 3, {{{0, 1, 2}}}), InvalidArgument);   // arity
    CHECK_THROWS_AS(Structure(sig, 3, {}), InvalidArgument);              // missing relation
}

TEST_CASE("signature invariants") {
    CHECK_THROWS_AS(Signature({}), InvalidArgument);
    CHECK_THROWS_AS(Signature({{"", 2}}), InvalidArgument);
    CHECK_THROWS_AS(Signature({{"R", 0}}), InvalidArgument);
    CHECK_THROWS_AS(Signature({{"R", 2}, {"R", 1}}), InvalidArgument);
    CHECK(Signature({{"R", 2}, {"S", 3}}).max_arity() == 3);
}

TEST_CASE("evaluate is invariant under tuple storage order") {
    const Signature sig({{"R", 2}});
    const Structure a(sig, 4, {{{0, 1}, {1, 2}, {2, 3}}});
    const Structure b(sig, 4, {{{2, 3}, {0, 1}, {1, 2}}});
    CHECK(a == b);
    const Structure templ = templates::build_cycle(4);
    const Assignment h{0, 1, 2, 3};
    CHECK(evaluate(a, templ, h).satisfied == evaluate(b, templ, h).satisfied);
}

TEST_CASE("property: degree sum equals sum of arity-weighted tuple counts") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Signature sig({{"R", 2}, {"S", 3}});
        std::vector<std::vector<std::vector<int>>> tuples(2);
        for (int r = 0; r < 2; ++r) {
            const int arity = sig.relation(r).arity;
            std::set<std::vector<int>> seen;
            const int want = static_cast<int>(rng() % 8);
            while (static_cast<int>(seen.size()) < want) {
                std::vector<int> tuple;
                for (int i = 0; i < arity; ++i) tuple.push_back(static_cast<int>(rng() % n));
                seen.insert(tuple);
            }
            tuples[static_cast<size_t>(r)].assign(seen.begin(), seen.end());
        }
        const Structure instance(sig, n, tuples);

        long long degree_sum = 0;
        for (int e = 0; e < n; ++e) degree_sum += degree(instance, e);
        long long expected = 0;
        for (int r = 0; r < 2; ++r)
            expected += static_cast<long long>(sig.relation(r).arity) *
                        static_cast<long long>(instance.tuples(r).size());
        CHECK(degree_sum == expected);

        const auto all = degrees(instance);
        for (int e = 0; e < n; ++e) CHECK(all[static_cast<size_t>(e)] == degree(instance, e));
    }
}

TEST_CASE("property: evaluate stays within [0, total tuples]") {
    std::mt19937_64 rng(7);
    const Structure templ = templates::build_no_rainbow();
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        std::set<std::vector<int>> seen;
        const int want = static_cast<int>(rng() % 10);
        while (static_cast<int>(seen.size()) < want) {
            std::vector<int> tuple;
            for (int i = 0; i < 3; ++i) tuple.push_back(static_cast<int>(rng() % n));
            seen.insert(tuple);
        }
        const Structure instance(templ.signature(), n,
                                 {std::vector<std::vector<int>>(seen.begin(), seen.end())});
        Assignment h;
        for (int e = 0; e < n; ++e) h.push_back(static_cast<int>(rng() % 3));
        const auto result = evaluate(instance, templ, h);
        CHECK(result.satisfied >= 0);
        CHECK(result.satisfied <= instance.total_tuple_count());
        CHECK(result.satisfied == oracle_satisfied(instance, templ, h));
        long long sum = 0;
        for (const auto& pr : result.per_relation) {
            CHECK(pr.satisfied <= pr.total);
            sum += pr.satisfied;
        }
        CHECK(sum == result.satisfied);
    }
}
