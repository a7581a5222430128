#include "oracles.hpp"

#include "zsl/error.hpp"
#include "zsl/sequence.hpp"

#include <doctest.h>

using namespace zsl;

TEST_SUITE("sequence") {

TEST_CASE("construction and basic accessors")
{
    const auto G = make_group({6});
    const auto S = Sequence::from_ids(G, {2, 1, 1, 5, 1});
    CHECK(S.length() == 5);
    CHECK(S.sum() == 4);
    CHECK(S.multiplicity(1) == 3);
    CHECK(S.support() == std::vector<ElementId>{1, 2, 5});
    CHECK(S.flatten() == std::vector<ElementId>{1, 1, 1, 2, 5});
    CHECK(S == Sequence::from_counts(G, {{5, 1}, {1, 2}, {2, 1}, {1, 1}, {3, 0}}));
    CHECK(Sequence::power_of(G, 1, 6).sum() == 0);
    CHECK(S.pow(2).length() == 10);
}

TEST_CASE("multiply and divide are inverse (random, seed 7)")
{
    const auto G = make_group({2, 4});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<ElementId> el(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ElementId> a, b;
        for (int i = 0; i < 6; ++i) {
            a.push_back(el(rng));
            b.push_back(el(rng));
        }
        const auto S = Sequence::from_ids(G, a);
        const auto T = Sequence::from_ids(G, b);
        const auto ST = S * T;
        CHECK(S.divides(ST));
        CHECK(divide(ST, T) == S);
        CHECK(mul(S, T) == ST);
        CHECK(ST.sum() == G.add(S.sum(), T.sum()));
        CHECK(negate(negate(S)) == S);
    }
    CHECK_THROWS_AS(divide(Sequence::from_ids(G, {1}), Sequence::from_ids(G, {2})), Error);
}

TEST_CASE("zero-sum freeness agrees with subset enumeration (seed 11)")
{
    const auto G = make_group({3, 3});
    const auto og = oracle::from(G);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<ElementId> el(1, 8);
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<ElementId> ids;
        const int n = len(rng);
        for (int i = 0; i < n; ++i)
            ids.push_back(el(rng));
        const auto S = Sequence::from_ids(G, ids);
        const auto M = oracle::to_multiset(S);
        const bool brute = !oracle::has_proper_zero_sum(og, M) && oracle::sum(og, M) != og.zero();
        CHECK(is_zero_sum_free(S) == brute);
    }
}

TEST_CASE("proper subsequence sums")
{
    const auto G = make_group({6});
    const auto S = Sequence::from_ids(G, {1, 2});
    const auto sums = proper_subsequence_sums(S).to_vector();
    CHECK(sums == std::vector<ElementId>{1, 2});
}

TEST_CASE("cross number and g-norm")
{
    const auto G = make_group({6});
    // g^3 (3g): 3/6 + 1/2
    CHECK(cross_number(Sequence::from_counts(G, {{1, 3}, {3, 1}})) == Rational(1));
    CHECK(cross_number(Sequence::power_of(G, 1, 6)) == Rational(1));
    CHECK_THROWS_AS(cross_number(Sequence::from_ids(G, {0})), Error);
    CHECK(g_norm(Sequence::power_of(G, 1, 6), 1) == Rational(1));
    CHECK(g_norm(Sequence::power_of(G, 5, 6), 1) == Rational(5));
    CHECK(g_norm(Sequence::from_counts(G, {{4, 2}, {3, 1}, {1, 1}}), 1) == Rational(2));
    const auto H = make_group({2, 2});
    CHECK_THROWS_AS(g_norm(Sequence::from_ids(H, {1}), 2), Error);
}

TEST_CASE("literal round trip")
{
    const auto G = make_group({2, 4});
    const auto S = parse_sequence(G, "(1,1)^2 (0,3) (1,0)");
    CHECK(S.length() == 4);
    CHECK(render(S) == "(0,3) (1,0) (1,1)^2");
    CHECK(parse_sequence(G, render(S)) == S);
    CHECK(parse_sequence(G, "(1,5)") == parse_sequence(G, "(1,1)"));
    CHECK_THROWS_AS(parse_sequence(G, "(1,1"), Error);
    CHECK_THROWS_AS(parse_sequence(G, "(1,1,1)"), Error);
    CHECK_THROWS_AS(parse_sequence(G, "(1,1)^x"), Error);
}

TEST_CASE("automorphism image")
{
    const auto G = make_group({6});
    std::vector<ElementId> t(6);
    for (ElementId x = 0; x < 6; ++x)
        t[x] = G.neg(x);
    const auto S = Sequence::from_ids(G, {1, 1, 2});
    CHECK(apply_map(S, t) == negate(S));
}

TEST_CASE("rational formatting")
{
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(4)) == "4");
}

}
