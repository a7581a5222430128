#include "zsl/catalog.hpp"
#include "zsl/error.hpp"
#include "zsl/invariants.hpp"

#include <doctest.h>

using namespace zsl;

TEST_SUITE("invariants") {

TEST_CASE("delta_of and rho_of")
{
    CHECK(delta_of(LengthSet{2, 4, 5}) == std::vector<int>{1, 2});
    CHECK(delta_of(LengthSet{3}).empty());
    CHECK(delta_of(LengthSet::interval(4, 11)) == std::vector<int>{1});
    CHECK(rho_of(LengthSet{2, 6}) == Rational(3));
    CHECK(rho_of(LengthSet{0}) == Rational(1));
}

TEST_CASE("delta_bounded")
{
    const auto C6 = make_group({6});
    CHECK(delta_bounded(C6, all_elements(C6), 16) == std::vector<int>{1, 2, 3, 4});
    CHECK(delta_bounded(C6, {1}, 12).empty());
    // {g, -g}: L(g^6 (-g)^6) = {2,6}
    CHECK(delta_bounded(C6, {1, 5}, 12) == std::vector<int>{4});
    CHECK_THROWS_AS(delta_bounded(C6, {1}, 1), Error);
}

TEST_CASE("Delta(C2^5) contains [1,4] through explicit sets")
{
    const catalog::C25 k;
    CHECK(length_set(k.U({1, 2}).pow(2)) == LengthSet{2, 3});
    CHECK(length_set(k.U({1, 2, 3}).pow(2)) == LengthSet{2, 4});
    CHECK(length_set(k.U({1, 2, 3, 4}).pow(2)) == LengthSet{2, 5});
    CHECK(length_set(k.U().pow(2)) == LengthSet{2, 6});
}

TEST_CASE("delta_star_bounded")
{
    const auto a = delta_star_bounded(make_group({6}), 16);
    REQUIRE_FALSE(a.values.empty());
    CHECK(a.values.back() == 4);
    const auto b = delta_star_bounded(make_group({2, 4}), 16);
    CHECK(b.values.back() == 2);
    CHECK(delta_star_bounded(make_group({3}), 12).values == std::vector<int>{1});
    CHECK_THROWS_AS(delta_star_bounded(make_group({2, 2, 2, 2, 2}), 6), GuardError);
}

TEST_CASE("delta_star gcds never grow with the bound")
{
    const auto G = make_group({6});
    const auto small = delta_star_bounded(G, 10);
    const auto large = delta_star_bounded(G, 14);
    std::map<std::uint32_t, int> at_small(small.per_subset.begin(), small.per_subset.end());
    for (const auto& [mask, g] : large.per_subset)
        if (auto it = at_small.find(mask); it != at_small.end())
            CHECK(g <= it->second);
}

TEST_CASE("rho_k")
{
    const auto C6 = make_group({6});
    CHECK(rho_k(C6, all_elements(C6), 2) == 6);
    CHECK(rho_k(C6, all_elements(C6), 3) == 7);
    CHECK(rho_k(make_group({2}), {1}, 2) == 2);
    CHECK_THROWS_AS(rho_k(C6, all_elements(C6), 4), GuardError);
    RhoGuard wide;
    wide.max_k = 4;
    CHECK(rho_k(C6, all_elements(C6), 4, wide) == 12);
}

TEST_CASE("daleth")
{
    CHECK(daleth(make_group({6})) == 6);
    CHECK(daleth(make_group({2, 4})) == 4);
    CHECK(daleth(make_group({2, 2, 4})) == 5);
    CHECK(daleth(make_group({2, 2, 2})) == 4);
    try {
        daleth(make_group({6}), {0});
        FAIL("daleth of {0} should be undefined");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::undefined_daleth);
    }
    const auto r = daleth(enumerate_atoms(make_group({2, 4})).atoms);
    CHECK(r.value == 4);
    CHECK(r.witness_lengths.contains(2));
    CHECK(r.witness_lengths.contains(4));
}

TEST_CASE("daleth never exceeds D(G0)")
{
    const auto G = make_group({2, 4});
    for (std::uint32_t mask = 1; mask < 256; mask += 7) {
        std::vector<ElementId> subset;
        for (ElementId i = 0; i < 8; ++i)
            if (mask >> i & 1U)
                subset.push_back(i);
        int d = 0;
        try {
            d = daleth(G, subset);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::undefined_daleth);
            continue;
        }
        CHECK(d <= davenport(G, subset));
    }
}

TEST_CASE("LCN sets and m")
{
    CHECK(is_lcn_set(make_group({2, 2, 2, 2}), all_elements(make_group({2, 2, 2, 2}))));
    CHECK(is_lcn_set(make_group({6}), {1}));
    CHECK(is_lcn_set(make_group({6}), {1, 2}));
    CHECK_FALSE(is_lcn_set(make_group({6}), {1, 5}));
    CHECK(m_bounded(make_group({4, 4}), 12).value == 1);
}

TEST_CASE("orbit representatives cover all atoms")
{
    const auto atoms = enumerate_atoms(make_group({2, 2, 2})).atoms;
    const auto reps = orbit_representatives(atoms);
    CHECK(reps.size() < atoms.size());
    CHECK(reps.front() == 0);
}

TEST_CASE("invariant report JSON")
{
    InvariantReport r;
    r.invariant = "delta";
    r.group = "6";
    r.subset = "(1) (5)";
    r.value = std::vector<int>{4};
    r.bound = 12;
    const auto j = r.to_json();
    CHECK(j["mode"] == "bounded");
    CHECK(j["value"] == nlohmann::json::array({4}));
    r.bound.reset();
    r.value = Rational(3, 2);
    CHECK(r.to_json()["value"] == "3/2");
    CHECK(r.to_json()["mode"] == "exact");
}

}
