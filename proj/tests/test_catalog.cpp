#include "zsl/atoms.hpp"
#include "zsl/catalog.hpp"
#include "zsl/error.hpp"
#include "zsl/lengths.hpp"

#include <doctest.h>

using namespace zsl;

TEST_SUITE("catalog") {

TEST_CASE("named atoms are atoms")
{
    for (const auto& e : catalog::entries()) {
        CAPTURE(e.label);
        CHECK(e.sequence.sum() == 0);
        const bool product = e.label.find(":A") != std::string::npos || e.label.find(":[") != std::string::npos;
        if (!product)
            CHECK(is_atom(e.sequence));
    }
    CHECK_THROWS_AS(catalog::lookup("C2^5:nope"), Error);
}

TEST_CASE("C2^5 basis conventions")
{
    const catalog::C25 k;
    const auto& G = k.group();
    CHECK(G.add(k.e(1), k.e(2)) == k.e({1, 2}));
    CHECK(k.e(0) == k.e({1, 2, 3, 4, 5}));
    CHECK(k.U().length() == 6);
    CHECK(k.V({1, 2}).length() == 5);
    CHECK(k.squares(3).length() == 6);
    CHECK_THROWS_AS(k.e(6), Error);
}

TEST_CASE("C6 builders")
{
    CHECK(catalog::c6_lemma34(2, 6).length() == 1 + 6 + 8);
    CHECK(catalog::c6_amp_square(-2, 6).length() == 2 + 6 + 10);
    CHECK_THROWS_AS(catalog::c6_amp_square(-9, 0), Error);
    for (int k = 0; k <= 2; ++k)
        for (const auto& r : catalog::amp4_c6_realizations(k))
            CHECK(r.sequence.sum() == 0);
}

TEST_CASE("witness sequences")
{
    CHECK(catalog::c333_U().length() == 7);
    CHECK(catalog::c44_U().length() == 7);
    const auto w = catalog::thm114_witness(6, 8);
    CHECK(w.V.length() == 6 + 8 - 1);
    CHECK(w.group.invariant_factors() == std::vector<int>{2, 24});
    CHECK_THROWS_AS(catalog::thm114_witness(6, 7), Error);
    CHECK(catalog::thm114_n1eq4_witness(8).V.length() == 11);
}

}
