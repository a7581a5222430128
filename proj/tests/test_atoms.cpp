#include "oracles.hpp"

#include "zsl/atoms.hpp"
#include "zsl/error.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace zsl;

namespace {

std::filesystem::path fresh_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("zslab-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("atoms") {

TEST_CASE("is_atom agrees with the oracle (seed 3)")
{
    const auto G = make_group({2, 4});
    const auto og = oracle::from(G);
    std::mt19937_64 rng(3);
    std::vector<ElementId> pool{0, 1, 2, 3, 4, 5, 6, 7};
    for (int trial = 0; trial < 400; ++trial) {
        const auto S = oracle::random_zero_sum(G, pool, 1 + static_cast<int>(rng() % 7), rng);
        CHECK(is_atom(S) == oracle::is_atom(og, oracle::to_multiset(S)));
    }
    CHECK_THROWS_AS(is_atom(Sequence(G)), Error);
    CHECK(is_atom(Sequence::from_ids(G, {0})));
}

TEST_CASE("Davenport constants of small groups")
{
    for (int n = 2; n <= 10; ++n)
        CHECK(davenport(make_group({n})) == n);
    for (int r = 1; r <= 4; ++r)
        CHECK(davenport(make_group(std::vector<int>(static_cast<std::size_t>(r), 2))) == r + 1);
    CHECK(davenport(make_group({2, 4})) == 5);
    CHECK(davenport(make_group({3, 3})) == 5);
    // subset: {g, 2g} in C6 has atoms g^6, g^4(2g), ..., (2g)^3
    CHECK(davenport(make_group({6}), {1, 2}) == 6);
    CHECK(davenport(make_group({6}), {2, 4}) == 3);
}

TEST_CASE("enumerate_atoms is sorted and complete over a subset")
{
    const auto G = make_group({6});
    const auto set = enumerate_atoms(G, {1, 5});
    CHECK(set.subset == std::vector<ElementId>{1, 5});
    CHECK(set.davenport == 6);
    CHECK(set.atoms.size() == 3);  // g(-g), g^6, (-g)^6
    CHECK(std::is_sorted(set.atoms.begin(), set.atoms.end()));
    const auto og = oracle::from(G);
    CHECK(set.atoms.size() == oracle::atoms(og, {{1}, {5}}).size());
}

TEST_CASE("length-filtered search matches the full list")
{
    const auto G = make_group({2, 2, 2});
    const auto all = enumerate_atoms(G).atoms;
    for (int len = 1; len <= 4; ++len) {
        std::size_t expected = 0;
        for (const auto& a : all)
            expected += a.length() == len ? 1 : 0;
        CHECK(atoms_of_length(G, all_elements(G), len).size() == expected);
    }
    std::size_t seen = 0;
    AtomSearch s;
    s.subset = all_elements(G);
    for_each_atom(G, s, [&](const Sequence&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("atoms_dividing")
{
    const auto G = make_group({6});
    const auto B = Sequence::from_counts(G, {{1, 4}, {2, 1}, {5, 1}});
    for (const auto& A : atoms_dividing(B)) {
        CHECK(is_atom(A));
        CHECK(A.divides(B));
    }
    CHECK(atoms_dividing(B).size() == 2);  // g(-g), g^4(2g)
}

TEST_CASE("standard circuits of C2^r")
{
    const auto G = make_group({2, 2, 2});
    const auto reps = standard_circuits(G);
    CHECK(reps.size() == 4);
    for (const auto& s : reps)
        CHECK(is_atom(s));
    CHECK(reps.back().length() == 4);
}

TEST_CASE("atom cache round trip, stale and corrupt entries")
{
    const auto dir = fresh_dir("cache");
    const auto G = make_group({2, 4});
    const auto subset = all_elements(G);
    CHECK_FALSE(cache_load(dir, G, subset).has_value());
    const auto computed = cached_atoms(dir, G, subset);
    const auto path = cache_path(dir, G, subset);
    REQUIRE(std::filesystem::exists(path));
    const auto loaded = cache_load(dir, G, subset);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == computed);
    CHECK(computed == enumerate_atoms(G));

    {
        std::ifstream in(path);
        auto j = nlohmann::json::parse(in);
        j["format_version"] = kCacheFormatVersion + 1;
        std::ofstream(path) << j.dump();
    }
    try {
        cache_load(dir, G, subset);
        FAIL("stale cache accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cache_stale);
    }
    CHECK(cached_atoms(dir, G, subset) == computed);
    CHECK(cache_load(dir, G, subset).has_value());

    std::ofstream(path) << "{ not json";
    try {
        cache_load(dir, G, subset);
        FAIL("corrupt cache accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cache_corrupt);
    }
    CHECK(cached_atoms(dir, G, subset) == computed);

    CHECK(cache_path(dir, G, subset) != cache_path(dir, G, {0, 1}));
    std::filesystem::remove_all(dir);
}

TEST_CASE("default cache directory honours the override variable")
{
    ::setenv("ZSLAB_CACHE_DIR", "/tmp/zslab-override", 1);
    CHECK(default_cache_dir() == std::filesystem::path("/tmp/zslab-override"));
    ::unsetenv("ZSLAB_CACHE_DIR");
}

}
