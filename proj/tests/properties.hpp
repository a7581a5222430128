#pragma once

// Property suites shared by the property tests and the acceptance runner.
// Each returns an empty string on success and a counterexample otherwise.

#include "oracles.hpp"

#include "zsl/atoms.hpp"
#include "zsl/error.hpp"
#include "zsl/invariants.hpp"
#include "zsl/lengths.hpp"

#include <random>
#include <sstream>
#include <string>

namespace props {

inline std::string lengths_text(const std::set<int>& L)
{
    std::string s;
    for (int x : L)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

/// enumerate_atoms equals the brute-force atom list for every group of order <= max_order.
inline std::string atom_oracle(std::size_t max_order = 9)
{
    for (std::size_t n = 1; n <= max_order; ++n)
        for (const auto& G : zsl::abelian_groups_of_order(n)) {
            const auto og = oracle::from(G);
            std::set<oracle::Multiset> want;
            for (auto& A : oracle::atoms(og, og.elements()))
                want.insert(std::move(A));
            std::set<oracle::Multiset> got;
            for (const auto& A : zsl::enumerate_atoms(G).atoms)
                got.insert(oracle::to_multiset(A));
            if (want != got)
                return "atom lists differ over " + G.name() + ": oracle " + std::to_string(want.size()) +
                       ", engine " + std::to_string(got.size());
        }
    return {};
}

/// length_set equals the brute-force factorization lengths for every zero-sum
/// B over G with |B| <= bound.
inline std::string length_oracle(const zsl::FiniteAbelianGroup& G, int bound, std::size_t* visited = nullptr)
{
    const auto og = oracle::from(G);
    const auto pool = oracle::atoms(og, og.elements());
    std::string failure;
    std::size_t count = 0;
    zsl::for_each_zero_sum(G, zsl::all_elements(G), bound, [&](const zsl::Sequence& B) {
        if (!failure.empty())
            return;
        ++count;
        const auto want = oracle::lengths(oracle::to_multiset(B), pool);
        const auto got = zsl::length_set(B);
        const std::set<int> got_set(got.values().begin(), got.values().end());
        if (want != got_set)
            failure = "L(" + zsl::render(B) + "): oracle " + lengths_text(want) + ", engine " + zsl::to_string(got);
    });
    if (visited)
        *visited = count;
    return failure;
}

/// ||B||_g / (n - 1) <= min L(B) <= max L(B) <= ||B||_g for random B over
/// C_n without zeros (g a generator).
inline std::string gnorm_sandwich(int n, int samples, std::uint64_t seed)
{
    const auto G = zsl::make_group({n});
    std::vector<zsl::ElementId> pool;
    for (int k = 1; k < n; ++k)
        pool.push_back(static_cast<zsl::ElementId>(k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(2, 16);
    for (int i = 0; i < samples; ++i) {
        zsl::Sequence B = oracle::random_zero_sum(G, pool, len(rng), rng);
        if (B.multiplicity(0) > 0)
            B = zsl::divide(B, zsl::Sequence::power_of(G, 0, B.multiplicity(0)));
        if (B.empty())
            continue;
        const zsl::Rational norm = zsl::g_norm(B, 1);
        const auto L = zsl::length_set(B);
        const bool ok = zsl::Rational(L.max()) <= norm && norm / (n - 1) <= zsl::Rational(L.min());
        if (!ok)
            return "B = " + zsl::render(B) + ": ||B||_g = " + zsl::to_string(norm) + ", L = " + zsl::to_string(L);
    }
    return {};
}

/// daleth(G0) <= 2 + max Delta_obs(G0) <= c_obs(G0) <= D(G0) for every
/// nonempty G0 in C_n on which daleth is defined; observations over |B| <= bound.
inline std::string daleth_chain(int n, int bound, int* tested = nullptr)
{
    const auto G = zsl::make_group({n});
    const auto sweep = zsl::subset_sweep(G, bound, true);
    int count = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<zsl::ElementId> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U)
                subset.push_back(static_cast<zsl::ElementId>(i));
        int d = 0;
        try {
            d = zsl::daleth(G, subset);
        } catch (const zsl::Error& e) {
            if (e.code() != zsl::Errc::undefined_daleth)
                throw;
            continue;
        }
        ++count;
        const auto deltas = zsl::bits_to_values(sweep.delta_bits[mask]);
        const int max_delta = deltas.empty() ? 0 : deltas.back();
        const int c = sweep.max_catenary[mask];
        const int D = zsl::davenport(G, subset);
        if (!(d <= 2 + max_delta && 2 + max_delta <= c && c <= D)) {
            std::ostringstream os;
            os << "G0 = " << zsl::render_subset(G, subset) << ": daleth " << d << ", 2 + max Delta " << 2 + max_delta
               << ", c " << c << ", D " << D;
            return os.str();
        }
    }
    if (tested)
        *tested = count;
    return {};
}

}  // namespace props
