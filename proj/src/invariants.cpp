#include "zsl/invariants.hpp"

#include "zsl/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

namespace zsl {

namespace {

std::uint64_t delta_bits_of(std::uint64_t lengths)
{
    std::uint64_t out = 0;
    int prev = -1;
    while (lengths != 0) {
        const int v = std::countr_zero(lengths);
        lengths &= lengths - 1;
        if (prev >= 0)
            out |= std::uint64_t{1} << (v - prev);
        prev = v;
    }
    return out;
}

std::uint32_t mask_of(const Sequence& S)
{
    std::uint32_t m = 0;
    for (const auto& e : S.entries())
        m |= std::uint32_t{1} << e.element;
    return m;
}

/// Visits every nonempty zero-sum multiset over `elems` of size <= bound whose
/// support satisfies `allowed` (checked whenever the support grows).
class ZeroSumWalker {
public:
    ZeroSumWalker(const FiniteAbelianGroup& G, std::vector<ElementId> elems, int bound,
                  std::function<bool(std::uint32_t)> allowed, std::function<void(const Sequence&)> visit)
        : G_(G), elems_(std::move(elems)), bound_(bound), allowed_(std::move(allowed)), visit_(std::move(visit))
    {
        counts_.assign(elems_.size(), 0);
    }

    void run() { dfs(0, 0, 0, 0); }

private:
    void dfs(std::size_t start, int len, ElementId sum, std::uint32_t mask)
    {
        if (len > 0 && sum == 0) {
            std::vector<std::pair<ElementId, int>> pairs;
            for (std::size_t i = 0; i < elems_.size(); ++i)
                if (counts_[i] > 0)
                    pairs.emplace_back(elems_[i], counts_[i]);
            visit_(Sequence::from_counts(G_, pairs));
        }
        if (len == bound_)
            return;
        for (std::size_t j = start; j < elems_.size(); ++j) {
            std::uint32_t next = mask;
            if (counts_[j] == 0 && elems_[j] < 32) {
                next |= std::uint32_t{1} << elems_[j];
                if (allowed_ && !allowed_(next))
                    continue;
            }
            ++counts_[j];
            dfs(j, len + 1, G_.add(sum, elems_[j]), next);
            --counts_[j];
        }
    }

    const FiniteAbelianGroup& G_;
    std::vector<ElementId> elems_;
    int bound_;
    std::function<bool(std::uint32_t)> allowed_;
    std::function<void(const Sequence&)> visit_;
    std::vector<int> counts_;
};

void check_sweep_order(const FiniteAbelianGroup& G, std::size_t max_order)
{
    if (G.order() > max_order || G.order() > 20)
        throw GuardError("subset-sweep-order", "--max-order",
                         "subset sweeps limited to groups of order " + std::to_string(max_order));
}

SubsetSweep sweep_impl(const FiniteAbelianGroup& G, int size_bound, bool with_catenary,
                       const std::function<bool(std::uint32_t)>& allowed)
{
    if (size_bound < 2)
        throw Error(Errc::invalid_argument, "size bound must be >= 2");
    SubsetSweep out;
    out.group = G;
    out.bound = size_bound;
    out.has_catenary = with_catenary;
    const std::size_t masks = std::size_t{1} << G.order();
    out.delta_bits.assign(masks, 0);
    out.max_catenary.assign(masks, with_catenary ? 0 : -1);
    auto engine = LengthEngine::for_subset(G, all_elements(G), size_bound);
    ZeroSumWalker walker(G, all_elements(G), size_bound, allowed, [&](const Sequence& B) {
        const std::uint32_t m = mask_of(B);
        out.delta_bits[m] |= delta_bits_of(engine.length_bits(B));
        if (with_catenary)
            out.max_catenary[m] = std::max(out.max_catenary[m], catenary_of_element(B));
    });
    walker.run();
    for (std::size_t bit = 1; bit < masks; bit <<= 1)
        for (std::size_t m = 0; m < masks; ++m)
            if (m & bit) {
                out.delta_bits[m] |= out.delta_bits[m ^ bit];
                out.max_catenary[m] = std::max(out.max_catenary[m], out.max_catenary[m ^ bit]);
            }
    return out;
}

}  // namespace

std::vector<int> delta_of(const LengthSet& L)
{
    std::vector<int> d;
    for (std::size_t i = 1; i < L.size(); ++i)
        d.push_back(L.values()[i] - L.values()[i - 1]);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

Rational rho_of(const LengthSet& L)
{
    if (L.empty())
        throw Error(Errc::invalid_argument, "elasticity of an empty set");
    if (L == LengthSet{0})
        return Rational(1);
    if (L.min() == 0)
        throw Error(Errc::invalid_argument, "length set contains 0 together with other values");
    return Rational(L.max(), L.min());
}

int gcd_of_bits(std::uint64_t bits)
{
    int g = 0;
    while (bits != 0) {
        g = std::gcd(g, std::countr_zero(bits));
        bits &= bits - 1;
    }
    return g;
}

std::vector<int> bits_to_values(std::uint64_t bits) { return LengthSet::from_bits(bits).values(); }

void for_each_zero_sum(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int max_length,
                       const std::function<void(const Sequence&)>& visit)
{
    std::vector<ElementId> elems = subset;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    ZeroSumWalker walker(G, elems, max_length, {}, visit);
    walker.run();
}

std::vector<int> delta_bounded(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int size_bound)
{
    if (size_bound < 2)
        throw Error(Errc::invalid_argument, "size bound must be >= 2");
    std::vector<ElementId> elems = subset;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    // zeros only shift lengths
    std::erase(elems, ElementId{0});
    if (elems.empty())
        return {};
    auto engine = LengthEngine::for_subset(G, elems, size_bound);
    std::uint64_t bits = 0;
    ZeroSumWalker walker(G, elems, size_bound, {}, [&](const Sequence& B) {
        bits |= delta_bits_of(engine.length_bits(B));
    });
    walker.run();
    return bits_to_values(bits);
}

SubsetSweep subset_sweep(const FiniteAbelianGroup& G, int size_bound, bool with_catenary)
{
    check_sweep_order(G, kSubsetSweepMaxOrder);
    return sweep_impl(G, size_bound, with_catenary, {});
}

DeltaStarResult delta_star_bounded(const FiniteAbelianGroup& G, int size_bound, std::size_t max_order)
{
    check_sweep_order(G, max_order);
    const SubsetSweep sweep = sweep_impl(G, size_bound, false, {});
    DeltaStarResult out;
    const std::size_t masks = sweep.delta_bits.size();
    std::vector<int> values;
    for (std::size_t m = 2; m < masks; m += 2) {  // even masks: 0 not in the subset
        const int g = gcd_of_bits(sweep.delta_bits[m]);
        if (g == 0)
            continue;
        out.per_subset.emplace_back(static_cast<std::uint32_t>(m), g);
        values.push_back(g);
        if (gcd_of_bits(sweep.delta_bits[m | 1]) != g)
            out.zero_conventions_agree = false;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    out.values = std::move(values);
    return out;
}

int rho_k(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int k, RhoGuard guard)
{
    return rho_k(enumerate_atoms(G, subset).atoms, k, guard);
}

int rho_k(const std::vector<Sequence>& atoms_in, int k, RhoGuard guard)
{
    if (k < 1)
        throw Error(Errc::invalid_argument, "k must be >= 1");
    if (k > guard.max_k)
        throw GuardError("rho-max-k", "--max-k", "rho_k sweeps limited to k <= " + std::to_string(guard.max_k));
    if (atoms_in.size() > guard.max_atoms)
        throw GuardError("rho-max-atoms", "--max-atoms",
                         "rho_k sweeps limited to " + std::to_string(guard.max_atoms) + " atoms");
    if (atoms_in.empty())
        throw Error(Errc::invalid_argument, "no atoms");
    std::vector<Sequence> atoms = atoms_in;
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const Sequence& a, const Sequence& b) { return a.length() > b.length(); });
    // twice the largest possible contribution of one atom to max L
    auto weight = [](const Sequence& U) { return U.length() == 1 && U.multiplicity(0) == 1 ? 2 : U.length(); };
    auto half_bound = [](const Sequence& B) { return 2 * B.multiplicity(0) + (B.length() - B.multiplicity(0)); };

    int best = 0;
    if (k == 2) {
        std::map<Sequence, std::size_t> index;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            index.emplace(atoms[i], i);
        for (const auto& U : atoms)
            if (index.count(negate(U))) {
                best = std::max(best, length_set(U * negate(U)).max());
                break;
            }
    }
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, const Sequence&)> rec = [&](std::size_t start, const Sequence& P) {
        const int picked = static_cast<int>(chosen.size());
        if (picked == k) {
            best = std::max(best, length_set(P).max());
            return;
        }
        for (std::size_t i = start; i < atoms.size(); ++i) {
            const int ub = (half_bound(P) + (k - picked) * weight(atoms[i])) / 2;
            if (ub <= best)
                break;  // weights are non-increasing along the list
            chosen.push_back(i);
            rec(i, P * atoms[i]);
            chosen.pop_back();
        }
    };
    rec(0, Sequence(atoms.front().group()));
    return best;
}

namespace {

/// Sub-multisets of size q of an atom, packed one element id per byte.
void sub_multisets(const Sequence& U, int q, std::vector<std::uint64_t>& out)
{
    const auto& e = U.entries();
    std::vector<int> take(e.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (left == 0) {
            std::uint64_t key = 0;
            for (std::size_t k = 0; k < e.size(); ++k)
                for (int c = 0; c < take[k]; ++c)
                    key = (key << 8) | e[k].element;
            out.push_back(key);
            return;
        }
        if (i == e.size())
            return;
        for (int c = std::min(left, e[i].multiplicity); c >= 0; --c) {
            take[i] = c;
            rec(i + 1, left - c);
        }
        take[i] = 0;
    };
    rec(0, q);
}

}  // namespace

std::vector<std::size_t> orbit_representatives(const std::vector<Sequence>& atoms)
{
    std::vector<std::size_t> reps;
    if (atoms.empty())
        return reps;
    std::vector<std::vector<ElementId>> autos;
    try {
        autos = automorphism_tables(atoms.front().group());
    } catch (const GuardError&) {
        for (std::size_t i = 0; i < atoms.size(); ++i)
            reps.push_back(i);
        return reps;
    }
    // keep the automorphisms that fix G0 = union of the supports
    std::vector<char> in_subset(atoms.front().group().order(), 0);
    for (const auto& U : atoms)
        for (const auto& e : U.entries())
            in_subset[e.element] = 1;
    std::erase_if(autos, [&](const std::vector<ElementId>& t) {
        for (std::size_t x = 0; x < t.size(); ++x)
            if (in_subset[x] && !in_subset[t[x]])
                return true;
        return false;
    });
    std::unordered_map<Sequence, std::size_t, SequenceHash> index;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        index.emplace(atoms[i], i);
    std::vector<char> seen(atoms.size(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (seen[i])
            continue;
        reps.push_back(i);
        for (const auto& t : autos)
            if (auto it = index.find(apply_map(atoms[i], t)); it != index.end())
                seen[it->second] = 1;
    }
    return reps;
}

DalethResult daleth(const std::vector<Sequence>& atoms)
{
    if (atoms.empty())
        throw Error(Errc::undefined_daleth, "no atoms");
    const FiniteAbelianGroup& G = atoms.front().group();
    std::vector<Sequence> negs;
    negs.reserve(atoms.size());
    for (const auto& U : atoms)
        negs.push_back(negate(U));
    std::map<int, std::vector<std::size_t>, std::greater<>> by_length;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].multiplicity(0) == 0)
            by_length[atoms[i].length()].push_back(i);
    if (by_length.empty())
        throw Error(Errc::undefined_daleth, "only the atom (0)");
    const int top = by_length.begin()->first;
    std::map<int, std::vector<std::size_t>> reps_by_length;
    for (std::size_t i : orbit_representatives(atoms))
        if (atoms[i].multiplicity(0) == 0)
            reps_by_length[atoms[i].length()].push_back(i);

    // index[(b, q)]: q-sub-multiset of a length-b atom -> atoms containing it
    std::map<std::pair<int, int>, std::unordered_map<std::uint64_t, std::vector<std::size_t>>> index;
    const bool packable = G.order() <= 256;
    auto index_for = [&](int b, int q) -> const std::unordered_map<std::uint64_t, std::vector<std::size_t>>& {
        auto [it, fresh] = index.try_emplace({b, q});
        if (fresh) {
            std::vector<std::uint64_t> keys;
            for (std::size_t j : by_length[b]) {
                keys.clear();
                sub_multisets(atoms[j], q, keys);
                for (auto k : keys)
                    it->second[k].push_back(j);
            }
        }
        return it->second;
    };

    // Search for the largest T such that some pair has min(L(UV) \ {2}) >= T.
    // A factorization of UV of length t uses at least 3t - |UV| atoms of
    // length 2, each of the form g(-g) with g | U and -g | V.
    for (int T = top; T >= 3; --T) {
        DalethResult found;
        found.value = -1;
        auto consider = [&](std::size_t i, std::size_t j) {
            const LengthSet L = length_set(atoms[i] * atoms[j]);
            if (L.size() < 2)
                return;
            const int m = L.values()[0] == 2 ? L.values()[1] : L.values()[0];
            if (m < T)
                return;
            const auto key = std::pair(std::min(i, j), std::max(i, j));
            if (m > found.value || (m == found.value && key < std::pair(found.first, found.second))) {
                found.value = m;
                found.first = key.first;
                found.second = key.second;
                found.witness_lengths = L;
            }
        };
        std::vector<std::uint64_t> keys;
        std::vector<std::size_t> candidates;
        // U runs over orbit representatives of the longer class, V over all
        // atoms of the shorter one.
        for (auto ia = by_length.begin(); ia != by_length.end(); ++ia) {
            for (auto ib = ia; ib != by_length.end(); ++ib) {
                const int a = ia->first;
                const int b = ib->first;
                if ((a + b) / 2 < T)
                    continue;
                const int q = 3 * T - (a + b);
                if (q > b)
                    continue;
                const auto& us = reps_by_length[a];
                if (q <= 0 || !packable || q > 8) {
                    for (std::size_t i : us)
                        for (std::size_t j : ib->second)
                            consider(i, j);
                    continue;
                }
                const auto& idx = index_for(b, q);
                for (std::size_t i : us) {
                    keys.clear();
                    sub_multisets(negs[i], q, keys);
                    candidates.clear();
                    for (auto k : keys)
                        if (auto it = idx.find(k); it != idx.end())
                            candidates.insert(candidates.end(), it->second.begin(), it->second.end());
                    std::sort(candidates.begin(), candidates.end());
                    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
                    for (std::size_t j : candidates)
                        consider(i, j);
                }
            }
        }
        if (found.value >= 0)
            return found;
    }
    throw Error(Errc::undefined_daleth, "every pair of atoms has set of lengths {2}");
}

int daleth(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset)
{
    return daleth(enumerate_atoms(G, subset).atoms).value;
}

int daleth(const FiniteAbelianGroup& G) { return daleth(G, all_elements(G)); }

bool is_lcn_set(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset)
{
    for (const auto& U : enumerate_atoms(G, subset).atoms)
        if (U.multiplicity(0) == 0 && cross_number(U) < Rational(1))
            return false;
    return true;
}

MResult m_bounded(const FiniteAbelianGroup& G, int size_bound, std::size_t max_order)
{
    check_sweep_order(G, max_order);
    const std::size_t masks = std::size_t{1} << G.order();
    std::vector<char> bad(masks, 0);
    for (const auto& U : enumerate_atoms(G).atoms)
        if (U.multiplicity(0) == 0 && cross_number(U) < Rational(1))
            bad[mask_of(U)] = 1;
    for (std::size_t bit = 1; bit < masks; bit <<= 1)
        for (std::size_t m = 0; m < masks; ++m)
            if ((m & bit) && bad[m ^ bit])
                bad[m] = 1;
    const SubsetSweep sweep = sweep_impl(G, size_bound, false, [&](std::uint32_t m) { return !bad[m]; });
    MResult out;
    for (std::size_t m = 0; m < masks; ++m) {
        if (bad[m])
            continue;
        const int g = gcd_of_bits(sweep.delta_bits[m]);
        if (g > out.value) {
            out.value = g;
            out.witness = static_cast<std::uint32_t>(m);
        }
    }
    return out;
}

nlohmann::json InvariantReport::to_json() const
{
    nlohmann::json j;
    j["invariant"] = invariant;
    j["group"] = group;
    j["subset"] = subset;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                j["value"] = to_string(v);
            else
                j["value"] = v;
        },
        value);
    j["mode"] = bound ? "bounded" : "exact";
    j["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
    if (!search_space.empty())
        j["search_space"] = search_space;
    return j;
}

}  // namespace zsl
