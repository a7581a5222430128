#include "oracles.hpp"

#include "zsl/error.hpp"
#include "zsl/group.hpp"

#include <doctest.h>

#include <set>

using namespace zsl;

TEST_SUITE("group") {

TEST_CASE("make_group canonicalizes to invariant factors")
{
    CHECK(make_group({6, 8}).invariant_factors() == std::vector<int>{2, 24});
    CHECK(make_group({4, 2}).invariant_factors() == std::vector<int>{2, 4});
    CHECK(make_group({3, 3, 3}).invariant_factors() == std::vector<int>{3, 3, 3});
    CHECK(make_group({2, 3}).invariant_factors() == std::vector<int>{6});
    CHECK(make_group({6, 8}).order() == 48);
    CHECK(make_group({2, 2, 2, 4}).name() == "C2xC2xC2xC4");
    CHECK(make_group({2, 2, 2, 4}).spec() == "2,2,2,4");
    CHECK(FiniteAbelianGroup().name() == "C1");
    CHECK_THROWS_AS(FiniteAbelianGroup::from_invariant_factors({4, 2}), Error);
}

TEST_CASE("arithmetic agrees with coordinate arithmetic")
{
    for (const auto& f : std::vector<std::vector<int>>{{6}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 4}, {2, 6}}) {
        const auto G = make_group(f);
        const auto og = oracle::from(G);
        for (ElementId a = 0; a < G.order(); ++a) {
            const auto ca = G.element(a).coords;
            CHECK(G.id_of(GroupElement{ca}) == a);
            CHECK(G.element(G.neg(a)).coords == og.neg(ca));
            CHECK(G.order_of(a) == og.order_of(ca));
            for (ElementId b = 0; b < G.order(); ++b) {
                const auto cb = G.element(b).coords;
                REQUIRE(G.element(G.add(a, b)).coords == og.add(ca, cb));
                REQUIRE(G.sub(G.add(a, b), b) == a);
            }
            CHECK(G.multiple(a, G.exponent()) == 0);
            CHECK(G.multiple(a, -1) == G.neg(a));
        }
    }
}

TEST_CASE("element ids follow lexicographic coordinate order")
{
    const auto G = make_group({2, 4});
    CHECK(G.zero_id() == 0);
    CHECK(render(G, 1) == "(0,1)");
    CHECK(render(G, 4) == "(1,0)");
    const std::vector<long long> c{1, -1};
    CHECK(G.from_coords(c) == G.id_of(GroupElement{{1, 3}}));
}

TEST_CASE("d_star")
{
    CHECK(d_star(make_group({6})) == 6);
    CHECK(d_star(make_group({2, 2, 2, 2, 2})) == 6);
    CHECK(d_star(make_group({2, 2, 2, 4})) == 7);
    CHECK(d_star(make_group({4, 4})) == 7);
}

TEST_CASE("abelian_groups_of_order counts isomorphism classes")
{
    CHECK(abelian_groups_of_order(1).size() == 1);
    CHECK(abelian_groups_of_order(8).size() == 3);
    CHECK(abelian_groups_of_order(12).size() == 2);
    CHECK(abelian_groups_of_order(16).size() == 5);
    CHECK(abelian_groups_of_order(30).size() == 1);
    CHECK(abelian_groups_of_order(36).size() == 4);
    const auto g8 = abelian_groups_of_order(8);
    CHECK(g8.front().invariant_factors() == std::vector<int>{2, 2, 2});
    CHECK(g8.back().invariant_factors() == std::vector<int>{8});
}

TEST_CASE("direct-sum presentation")
{
    const auto P = present_direct_sum({6, 8});
    CHECK(P.group.invariant_factors() == std::vector<int>{2, 24});
    CHECK(P.group.order_of(P.generators[0]) == 6);
    CHECK(P.group.order_of(P.generators[1]) == 8);
    std::set<ElementId> image;
    for (long long a = 0; a < 6; ++a)
        for (long long b = 0; b < 8; ++b)
            image.insert(P.combine({a, b}));
    CHECK(image.size() == 48);
}

TEST_CASE("automorphism tables")
{
    CHECK(automorphism_tables(make_group({6})).size() == 2);
    CHECK(automorphism_tables(make_group({2, 2})).size() == 6);
    CHECK(automorphism_tables(make_group({2, 4})).size() == 8);
    const auto G = make_group({2, 4});
    for (const auto& t : automorphism_tables(G)) {
        std::set<ElementId> img(t.begin(), t.end());
        CHECK(img.size() == G.order());
        for (ElementId a = 0; a < G.order(); ++a)
            for (ElementId b = 0; b < G.order(); ++b)
                REQUIRE(t[G.add(a, b)] == G.add(t[a], t[b]));
    }
    CHECK_THROWS_AS(automorphism_tables(make_group({2, 2, 2, 2}), 100), GuardError);
}

TEST_CASE("structure predicates")
{
    CHECK(is_cyclic(make_group({6})));
    CHECK_FALSE(is_cyclic(make_group({2, 2})));
    CHECK(is_elementary_2_group(make_group({2, 2, 2})));
    CHECK_FALSE(is_elementary_2_group(make_group({2, 4})));
}

TEST_CASE("parse_group_spec")
{
    CHECK(parse_group_spec("4,2").invariant_factors() == std::vector<int>{2, 4});
    CHECK(parse_group_spec(" 2, 2, 4 ").order() == 16);
    CHECK_THROWS_AS(parse_group_spec("2,x"), Error);
    CHECK_THROWS_AS(parse_group_spec("1"), Error);
    CHECK(parse_group_spec("").order() == 1);
}

}
