#include "zsl/error.hpp"
#include "zsl/structure.hpp"

#include <doctest.h>

using namespace zsl;

TEST_SUITE("structure") {

TEST_CASE("intervals")
{
    CHECK(is_interval(LengthSet::interval(4, 11)));
    CHECK(is_interval(LengthSet{3}));
    CHECK_FALSE(is_interval(LengthSet{2, 4}));
}

TEST_CASE("AMP recognition")
{
    const auto a = is_amp(LengthSet{2, 5, 6, 9}, 4, {0, 3, 4});
    REQUIRE(a);
    CHECK(a->offset == 2);
    CHECK(a->ell == 1);
    CHECK(is_amp(LengthSet{2, 5}, 4, {0, 3, 4}));
    CHECK_FALSE(is_amp(LengthSet{2, 4, 5}, 4, {0, 3, 4}));
    CHECK(is_amp(LengthSet{3, 4, 7}, 4, {0, 1, 4}));
    CHECK_THROWS_AS(is_amp(LengthSet{2, 5}, 4, {1, 3}), Error);
}

TEST_CASE("amp_decompositions")
{
    const auto ds = amp_decompositions(LengthSet{2, 5, 6, 9});
    REQUIRE_FALSE(ds.empty());
    CHECK(ds.front().d == 4);
    CHECK(ds.front().period == std::vector<int>{0, 3, 4});
    const auto iv = amp_decompositions(LengthSet::interval(2, 6));
    REQUIRE_FALSE(iv.empty());
    CHECK(iv.front().d == 1);
    // every decomposition found passes is_amp
    for (const auto& d : amp_decompositions(LengthSet{4, 6, 7, 8, 10, 11}))
        CHECK(is_amp(LengthSet{4, 6, 7, 8, 10, 11}, d.d, d.period));
}

TEST_CASE("AAMP recognition")
{
    CHECK(is_aamp(LengthSet{2, 5, 6, 9}, 4, {0, 3, 4}, 0));
    CHECK(is_aamp(LengthSet{2, 5}, 4, {0, 3, 4}, 0));
    const auto a = is_aamp(LengthSet{2, 4, 5}, 1, {0, 1}, 2);
    REQUIRE(a);
    CHECK(a->y == 4);
    CHECK(a->initial == std::vector<int>{-2});
    CHECK(a->central == std::vector<int>{0, 1});
    CHECK_FALSE(is_aamp(LengthSet{2, 4, 5}, 1, {0, 1}, 0));
    CHECK_THROWS_AS(is_aamp(LengthSet{2, 4}, 2, {0, 2}, -1), Error);
}

TEST_CASE("families")
{
    CHECK(family_theorem_a(0, 0) == LengthSet{0});
    CHECK(family_theorem_a(1, 2) == LengthSet{5, 6, 7});
    CHECK(family_lemma72(0, 1) == LengthSet{2, 5});
    CHECK(family_lemma54(1) == LengthSet{3, 5, 7});
    CHECK(family_lemma54(2) == LengthSet{6, 8, 10, 12, 14});
    const auto p53 = family_prop53(2);
    CHECK(std::find(p53.begin(), p53.end(), LengthSet{2, 4, 5}) != p53.end());
    CHECK(family_amp4_c6("1a", 0, 0) == LengthSet{4, 5, 6, 8});
    CHECK(family_amp4_c6("3c", 0, 0) == LengthSet{4, 6, 7, 8, 10, 11});
    CHECK(amp4_c6_cases().size() == 9);
    CHECK(family("theorem_a", {"1", "2"}) == std::vector<LengthSet>{LengthSet{5, 6, 7}});
    CHECK_THROWS_AS(family("nope", {}), Error);
    CHECK_THROWS_AS(family("theorem_a", {"-1", "0"}), Error);
    CHECK_THROWS_AS(family_amp4_c6("4a", 0, 0), Error);
}

TEST_CASE("every amp4_c6 member is an AMP with its period")
{
    for (const auto& c : amp4_c6_cases())
        for (int y = 0; y <= 2; ++y)
            for (int k = 0; k <= 3; ++k)
                CHECK(is_amp(family_amp4_c6(c, y, k), 4, amp4_c6_period(c)));
}

TEST_CASE("descriptor JSON")
{
    const auto a = is_amp(LengthSet{2, 5, 6, 9}, 4, {0, 3, 4});
    const auto j = to_json(*a);
    CHECK(j["d"] == 4);
    CHECK(j["period"] == nlohmann::json::array({0, 3, 4}));
}

}
