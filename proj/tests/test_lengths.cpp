#include "oracles.hpp"

#include "zsl/error.hpp"
#include "zsl/lengths.hpp"

#include <doctest.h>

using namespace zsl;

TEST_SUITE("lengths") {

TEST_CASE("LengthSet basics")
{
    const LengthSet L{5, 2, 4, 2};
    CHECK(L.values() == std::vector<int>{2, 4, 5});
    CHECK(L.min() == 2);
    CHECK(L.max() == 5);
    CHECK(L.contains(4));
    CHECK_FALSE(L.contains(3));
    CHECK(L.contains_all(LengthSet{2, 5}));
    CHECK(L.shifted(3) == LengthSet{5, 7, 8});
    CHECK(LengthSet::interval(4, 7) == LengthSet{4, 5, 6, 7});
    CHECK(LengthSet::from_bits(0b110100) == LengthSet{2, 4, 5});
    CHECK(to_string(L) == "{2,4,5}");
    CHECK_THROWS_AS(LengthSet().min(), Error);
}

TEST_CASE("parse_length_set")
{
    CHECK(parse_length_set("2,5,6,9") == LengthSet{2, 5, 6, 9});
    CHECK(parse_length_set("{2, 4,5}") == LengthSet{2, 4, 5});
    CHECK(parse_length_set("[4,11]") == LengthSet::interval(4, 11));
    CHECK(parse_length_set("2,4-6") == LengthSet{2, 4, 5, 6});
    CHECK_THROWS_AS(parse_length_set("2,,x"), Error);
}

TEST_CASE("known sets of lengths")
{
    const auto C6 = make_group({6});
    CHECK(length_set(Sequence::from_counts(C6, {{1, 6}, {5, 6}})) == LengthSet{2, 6});
    CHECK(length_set(Sequence::from_counts(C6, {{1, 4}, {2, 1}, {5, 4}, {4, 1}})) == LengthSet{2, 4, 5});
    CHECK(length_set(Sequence::from_counts(C6, {{0, 2}, {1, 6}})) == LengthSet{3});
    CHECK(length_set(Sequence(C6)) == LengthSet{0});
    CHECK_THROWS_AS(length_set(Sequence::from_ids(C6, {1})), Error);
}

TEST_CASE("length_set against factorization oracle (seed 5)")
{
    for (const auto& f : std::vector<std::vector<int>>{{6}, {2, 4}, {3, 3}, {2, 2, 2}}) {
        const auto G = make_group(f);
        const auto og = oracle::from(G);
        std::mt19937_64 rng(5);
        const auto pool = all_elements(G);
        for (int trial = 0; trial < 60; ++trial) {
            const auto B = oracle::random_zero_sum(G, pool, 2 + static_cast<int>(rng() % 10), rng);
            const auto want = oracle::lengths(og, oracle::to_multiset(B));
            const auto got = length_set(B);
            REQUIRE(std::set<int>(got.values().begin(), got.values().end()) == want);
        }
    }
}

TEST_CASE("factorization enumeration and catenary degree against oracle (seed 9)")
{
    const auto G = make_group({6});
    const auto og = oracle::from(G);
    std::mt19937_64 rng(9);
    const auto pool = all_elements(G);
    for (int trial = 0; trial < 40; ++trial) {
        const auto B = oracle::random_zero_sum(G, pool, 2 + static_cast<int>(rng() % 9), rng);
        const auto M = oracle::to_multiset(B);
        const auto zs = enumerate_factorizations(B);
        CHECK(zs.size() == oracle::factorizations(og, M).size());
        for (const auto& z : zs) {
            Sequence p(G);
            for (const auto& a : z.atoms) {
                CHECK(is_atom(a));
                p *= a;
            }
            CHECK(p == B);
        }
        CHECK(catenary_degree(zs) == oracle::catenary(og, M));
        CHECK(catenary_of_element(B) == oracle::catenary(og, M));
    }
}

TEST_CASE("factorization cap")
{
    const auto G = make_group({6});
    const auto B = Sequence::from_counts(G, {{1, 6}, {2, 3}, {4, 3}, {5, 6}});
    CHECK(enumerate_factorizations(B).size() > 3);
    CHECK_THROWS_AS(enumerate_factorizations(B, 3), Error);
}

TEST_CASE("distance between factorizations")
{
    const auto G = make_group({6});
    const auto B = Sequence::from_counts(G, {{1, 6}, {5, 6}});
    const auto zs = enumerate_factorizations(B);
    REQUIRE(zs.size() == 2);
    CHECK(distance(zs[0], zs[1]) == 6);
    CHECK(distance(zs[0], zs[0]) == 0);
    CHECK(catenary_degree(zs) == 6);
}

TEST_CASE("engine memo reuse is consistent")
{
    const auto G = make_group({2, 4});
    auto engine = LengthEngine::for_subset(G, {1, 3, 4, 5, 6, 7}, 8);
    std::mt19937_64 rng(13);
    const std::vector<ElementId> pool{1, 3, 4, 5, 6, 7};
    for (int trial = 0; trial < 50; ++trial) {
        const auto B = oracle::random_zero_sum(G, pool, 2 + static_cast<int>(rng() % 6), rng);
        bool fits = true;
        for (const auto& e : B.entries())
            fits = fits && e.multiplicity <= 8;
        if (!fits || B.multiplicity(0) > 0 || B.multiplicity(2) > 0)
            continue;
        CHECK(engine.length_set(B) == length_set(B));
    }
    CHECK(engine.memo_size() > 0);
}

TEST_CASE("pair sweep over C6")
{
    const auto G = make_group({6});
    const auto atoms = enumerate_atoms(G).atoms;
    PairFilter f;
    f.min_atom_length = 5;
    std::set<LengthSet> sets;
    for (const auto& r : pair_length_sets(atoms, f, 2)) {
        CHECK(r.first <= r.second);
        CHECK(length_set(atoms[r.first] * atoms[r.second]) == r.lengths);
        sets.insert(r.lengths);
    }
    CHECK(sets.count(LengthSet{2, 5}) == 1);
    CHECK(sets.count(LengthSet{2, 4, 5}) == 1);
    f.negatives_only = true;
    for (const auto& r : pair_length_sets(atoms, f, 1))
        CHECK(negate(atoms[r.first]) == atoms[r.second]);
}

}
