#pragma once

// Brute-force reference implementations. They use only coordinate vectors and
// plain recursion so they share no code paths with the library engines.

#include "zsl/group.hpp"
#include "zsl/sequence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Coords = std::vector<int>;
using Multiset = std::map<Coords, int>;

struct Group {
    std::vector<int> n;

    Coords zero() const { return Coords(n.size(), 0); }
    Coords add(const Coords& a, const Coords& b) const
    {
        Coords c(n.size());
        for (std::size_t i = 0; i < n.size(); ++i)
            c[i] = (a[i] + b[i]) % n[i];
        return c;
    }
    Coords neg(const Coords& a) const
    {
        Coords c(n.size());
        for (std::size_t i = 0; i < n.size(); ++i)
            c[i] = (n[i] - a[i]) % n[i];
        return c;
    }
    std::vector<Coords> elements() const
    {
        std::vector<Coords> out{Coords{}};
        for (int f : n) {
            std::vector<Coords> next;
            for (const auto& p : out)
                for (int x = 0; x < f; ++x) {
                    auto q = p;
                    q.push_back(x);
                    next.push_back(q);
                }
            out = std::move(next);
        }
        return out;
    }
    int order() const { return std::accumulate(n.begin(), n.end(), 1, std::multiplies<>()); }
    int order_of(const Coords& a) const
    {
        Coords x = a;
        int k = 1;
        while (x != zero()) {
            x = add(x, a);
            ++k;
        }
        return k;
    }
};

inline Group from(const zsl::FiniteAbelianGroup& G) { return Group{G.invariant_factors()}; }

inline Coords sum(const Group& G, const Multiset& S)
{
    Coords s = G.zero();
    for (const auto& [x, m] : S)
        for (int i = 0; i < m; ++i)
            s = G.add(s, x);
    return s;
}

inline int length(const Multiset& S)
{
    int l = 0;
    for (const auto& [x, m] : S)
        l += m;
    return l;
}

/// Every nonempty proper sub-multiset, via the product of multiplicity ranges.
inline bool has_proper_zero_sum(const Group& G, const Multiset& S)
{
    std::vector<std::pair<Coords, int>> items(S.begin(), S.end());
    const int total = length(S);
    bool found = false;
    std::function<void(std::size_t, Coords, int)> rec = [&](std::size_t i, Coords s, int taken) {
        if (found)
            return;
        if (i == items.size()) {
            if (taken > 0 && taken < total && s == G.zero())
                found = true;
            return;
        }
        Coords t = s;
        for (int k = 0; k <= items[i].second; ++k) {
            rec(i + 1, t, taken + k);
            t = G.add(t, items[i].first);
        }
    };
    rec(0, G.zero(), 0);
    return found;
}

inline bool is_atom(const Group& G, const Multiset& S)
{
    return length(S) > 0 && sum(G, S) == G.zero() && !has_proper_zero_sum(G, S);
}

/// All atoms over `subset` of length at most `max_len` (default |G|).
inline std::vector<Multiset> atoms(const Group& G, const std::vector<Coords>& subset, int max_len = 0)
{
    if (max_len == 0)
        max_len = G.order();
    std::vector<Multiset> out;
    Multiset cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int len) {
        if (i == subset.size()) {
            if (is_atom(G, cur))
                out.push_back(cur);
            return;
        }
        for (int k = 0; len + k <= max_len; ++k) {
            if (k > 0)
                cur[subset[i]] = k;
            rec(i + 1, len + k);
        }
        cur.erase(subset[i]);
    };
    rec(0, 0);
    return out;
}

inline bool divides(const Multiset& a, const Multiset& b)
{
    for (const auto& [x, m] : a) {
        auto it = b.find(x);
        if (it == b.end() || it->second < m)
            return false;
    }
    return true;
}

inline Multiset minus(Multiset b, const Multiset& a)
{
    for (const auto& [x, m] : a)
        if ((b[x] -= m) == 0)
            b.erase(x);
    return b;
}

/// Factorizations as multisets of indices into `pool` (sorted index lists);
/// `pool` must contain every atom dividing B.
inline std::vector<std::vector<int>> factorizations(const Multiset& B, const std::vector<Multiset>& pool)
{
    std::vector<Multiset> all;
    for (const auto& A : pool)
        if (divides(A, B))
            all.push_back(A);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::function<void(const Multiset&, std::size_t)> rec = [&](const Multiset& rest, std::size_t from) {
        if (rest.empty()) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t i = from; i < all.size(); ++i)
            if (divides(all[i], rest)) {
                chosen.push_back(static_cast<int>(i));
                rec(minus(rest, all[i]), i);
                chosen.pop_back();
            }
    };
    rec(B, 0);
    return out;
}

inline std::vector<std::vector<int>> factorizations(const Group& G, const Multiset& B)
{
    std::vector<Coords> support;
    for (const auto& [x, m] : B)
        support.push_back(x);
    return factorizations(B, atoms(G, support, length(B)));
}

inline std::set<int> lengths(const Multiset& B, const std::vector<Multiset>& pool)
{
    std::set<int> L;
    for (const auto& z : factorizations(B, pool))
        L.insert(static_cast<int>(z.size()));
    return L;
}

inline std::set<int> lengths(const Group& G, const Multiset& B)
{
    std::set<int> L;
    for (const auto& z : factorizations(G, B))
        L.insert(static_cast<int>(z.size()));
    return L;
}

/// d(z, w) = max(|z / gcd|, |w / gcd|) on sorted index lists.
inline int distance(const std::vector<int>& z, const std::vector<int>& w)
{
    std::vector<int> common;
    std::set_intersection(z.begin(), z.end(), w.begin(), w.end(), std::back_inserter(common));
    const int c = static_cast<int>(common.size());
    return std::max(static_cast<int>(z.size()) - c, static_cast<int>(w.size()) - c);
}

/// Smallest N such that the graph on Z(B) with edges of distance <= N is
/// connected (0 for a single factorization).
inline int catenary(const Group& G, const Multiset& B)
{
    const auto Z = factorizations(G, B);
    for (int N = 0;; ++N) {
        std::vector<bool> seen(Z.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < Z.size(); ++j)
                if (!seen[j] && distance(Z[i], Z[j]) <= N) {
                    seen[j] = true;
                    ++reached;
                    stack.push_back(j);
                }
        }
        if (reached == Z.size())
            return N;
    }
}

inline Multiset to_multiset(const zsl::Sequence& S)
{
    Multiset M;
    for (const auto& e : S.entries()) {
        const auto g = S.group().element(e.element);
        M[g.coords] = e.multiplicity;
    }
    return M;
}

inline zsl::Sequence to_sequence(const zsl::FiniteAbelianGroup& G, const Multiset& M)
{
    std::vector<std::pair<zsl::ElementId, int>> p;
    for (const auto& [x, m] : M)
        p.emplace_back(G.id_of(zsl::GroupElement{x}), m);
    return zsl::Sequence::from_counts(G, p);
}

/// Random zero-sum sequence of length `len` (>= 1) with elements drawn from
/// `pool`: len - 1 random draws and the negated sum appended.
inline zsl::Sequence random_zero_sum(const zsl::FiniteAbelianGroup& G, const std::vector<zsl::ElementId>& pool,
                                     int len, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<zsl::ElementId> ids;
    zsl::ElementId s = 0;
    for (int i = 0; i + 1 < len; ++i) {
        ids.push_back(pool[pick(rng)]);
        s = G.add(s, ids.back());
    }
    ids.push_back(G.neg(s));
    return zsl::Sequence::from_ids(G, ids);
}

}  // namespace oracle
