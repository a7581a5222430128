#include "zsl/lengths.hpp"

#include "zsl/error.hpp"
#include "zsl/parallel.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <map>

namespace zsl {

LengthSet::LengthSet(std::initializer_list<int> values) : LengthSet(std::vector<int>(values)) {}

LengthSet::LengthSet(std::vector<int> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

LengthSet LengthSet::from_bits(std::uint64_t bits)
{
    LengthSet L;
    while (bits != 0) {
        L.values_.push_back(std::countr_zero(bits));
        bits &= bits - 1;
    }
    return L;
}

LengthSet LengthSet::interval(int lo, int hi)
{
    LengthSet L;
    for (int v = lo; v <= hi; ++v)
        L.values_.push_back(v);
    return L;
}

int LengthSet::min() const
{
    if (values_.empty())
        throw Error(Errc::invalid_argument, "empty length set has no minimum");
    return values_.front();
}

int LengthSet::max() const
{
    if (values_.empty())
        throw Error(Errc::invalid_argument, "empty length set has no maximum");
    return values_.back();
}

bool LengthSet::contains(int v) const noexcept { return std::binary_search(values_.begin(), values_.end(), v); }

bool LengthSet::contains_all(const LengthSet& other) const noexcept
{
    return std::includes(values_.begin(), values_.end(), other.values_.begin(), other.values_.end());
}

LengthSet LengthSet::shifted(int k) const
{
    LengthSet L = *this;
    for (auto& v : L.values_)
        v += k;
    return L;
}

std::string to_string(const LengthSet& L)
{
    std::string s = "{";
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(L.values()[i]);
    }
    return s + "}";
}

LengthSet parse_length_set(std::string_view text)
{
    std::string_view body = text;
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
            v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
            v.remove_suffix(1);
        return v;
    };
    body = trim(body);
    bool interval = false;
    if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
        const char close = body.front() == '{' ? '}' : ']';
        interval = body.front() == '[';
        if (body.back() != close)
            throw Error(Errc::parse_error, "unbalanced brackets in '" + std::string(text) + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> values;
    auto read = [&](std::string_view tok) {
        tok = trim(tok);
        int v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size())
            throw Error(Errc::parse_error, "bad integer '" + std::string(tok) + "' in '" + std::string(text) + "'");
        return v;
    };
    std::size_t pos = 0;
    while (pos <= body.size() && !trim(body).empty()) {
        const std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (auto dash = tok.find('-', 1); dash != std::string_view::npos && !trim(tok.substr(0, dash)).empty()) {
            const int lo = read(tok.substr(0, dash));
            const int hi = read(tok.substr(dash + 1));
            for (int v = lo; v <= hi; ++v)
                values.push_back(v);
        } else {
            values.push_back(read(tok));
        }
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    if (interval) {
        if (values.size() != 2)
            throw Error(Errc::parse_error, "interval '" + std::string(text) + "' needs exactly two endpoints");
        return LengthSet::interval(values[0], values[1]);
    }
    return LengthSet(std::move(values));
}

LengthEngine::LengthEngine(FiniteAbelianGroup G, std::vector<ElementId> support, std::vector<int> caps,
                           const std::vector<Sequence>& atoms)
    : G_(std::move(G))
{
    if (support.size() != caps.size())
        throw Error(Errc::invalid_argument, "caps must parallel the support");
    std::vector<std::pair<ElementId, int>> items;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] != 0 && caps[i] > 0)
            items.emplace_back(support[i], caps[i]);
    std::sort(items.begin(), items.end());
    index_of_.assign(G_.order(), -1);
    unsigned __int128 radix = 1;
    const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
    for (auto [x, cap] : items) {
        if (index_of_[x] >= 0)
            throw Error(Errc::invalid_argument, "duplicate support element");
        index_of_[x] = static_cast<int>(support_.size());
        support_.push_back(x);
        caps_.push_back(cap);
        radix_.push_back(radix);
        if (radix > limit / static_cast<unsigned>(cap + 1))
            throw GuardError("memo-key-width", "--max-support",
                             "support and multiplicities too large for a 128-bit state key");
        radix *= static_cast<unsigned>(cap + 1);
    }
    bucket_.resize(support_.size());
    for (const auto& U : atoms) {
        if (U.multiplicity(0) > 0)
            continue;
        AtomCounts c;
        bool fits = true;
        for (const auto& e : U.entries()) {
            const int idx = index_of_[e.element];
            if (idx < 0 || e.multiplicity > caps_[static_cast<std::size_t>(idx)]) {
                fits = false;
                break;
            }
            c.entries.emplace_back(idx, e.multiplicity);
            c.key += radix_[static_cast<std::size_t>(idx)] * static_cast<unsigned>(e.multiplicity);
        }
        if (!fits)
            continue;
        std::sort(c.entries.begin(), c.entries.end());
        bucket_[static_cast<std::size_t>(c.entries.front().first)].push_back(static_cast<int>(atoms_.size()));
        atoms_.push_back(U);
        counts_.push_back(std::move(c));
    }
    current_.assign(support_.size(), 0);
}

LengthEngine LengthEngine::for_subset(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int cap)
{
    AtomSearch search;
    search.subset = subset;
    std::sort(search.subset.begin(), search.subset.end());
    search.subset.erase(std::unique(search.subset.begin(), search.subset.end()), search.subset.end());
    search.caps.assign(search.subset.size(), cap);
    std::vector<Sequence> atoms;
    for_each_atom(G, search, [&](const Sequence& U) {
        atoms.push_back(U);
        return true;
    });
    std::sort(atoms.begin(), atoms.end());
    return LengthEngine(G, search.subset, search.caps, atoms);
}

LengthEngine LengthEngine::for_sequence(const Sequence& B)
{
    std::vector<ElementId> support;
    std::vector<int> caps;
    for (const auto& e : B.entries()) {
        support.push_back(e.element);
        caps.push_back(e.multiplicity);
    }
    return LengthEngine(B.group(), support, caps, atoms_dividing(B));
}

int LengthEngine::load(const Sequence& B, unsigned __int128& key, int& remaining)
{
    if (!(B.group() == G_) && !B.empty())
        throw Error(Errc::invalid_argument, "sequence is over a different group than the engine");
    key = 0;
    remaining = 0;
    int zeros = 0;
    std::fill(current_.begin(), current_.end(), 0);
    for (const auto& e : B.entries()) {
        if (e.element == 0) {
            zeros = e.multiplicity;
            continue;
        }
        const int idx = index_of_[e.element];
        if (idx < 0 || e.multiplicity > caps_[static_cast<std::size_t>(idx)])
            throw Error(Errc::invalid_argument, "sequence exceeds the engine's support or multiplicity bounds");
        current_[static_cast<std::size_t>(idx)] = e.multiplicity;
        key += radix_[static_cast<std::size_t>(idx)] * static_cast<unsigned>(e.multiplicity);
        remaining += e.multiplicity;
    }
    return zeros;
}

void LengthEngine::unload() noexcept { std::fill(current_.begin(), current_.end(), 0); }

std::uint64_t LengthEngine::length_bits(const Sequence& B)
{
    if (B.sum() != 0)
        throw Error(Errc::not_zero_sum, render(B) + " does not sum to zero");
    unsigned __int128 key = 0;
    int remaining = 0;
    const int zeros = load(B, key, remaining);
    if (zeros + remaining / 2 >= 64) {
        unload();
        throw GuardError("max-length", "--max-length", "set of lengths may exceed 63");
    }
    std::uint64_t bits = 0;
    try {
        bits = solve(0, key, remaining);
    } catch (...) {
        unload();
        throw;
    }
    unload();
    return bits << zeros;
}

std::uint64_t LengthEngine::solve(std::size_t start, unsigned __int128 key, int remaining)
{
    if (remaining == 0)
        return 1;
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    std::size_t i = start;
    while (current_[i] == 0)
        ++i;
    std::uint64_t bits = 0;
    for (int a : bucket_[i]) {
        const AtomCounts& c = counts_[static_cast<std::size_t>(a)];
        bool divides = true;
        for (auto [idx, m] : c.entries)
            if (current_[static_cast<std::size_t>(idx)] < m) {
                divides = false;
                break;
            }
        if (!divides)
            continue;
        const int len = atoms_[static_cast<std::size_t>(a)].length();
        for (auto [idx, m] : c.entries)
            current_[static_cast<std::size_t>(idx)] -= m;
        bits |= solve(i, key - c.key, remaining - len) << 1;
        for (auto [idx, m] : c.entries)
            current_[static_cast<std::size_t>(idx)] += m;
    }
    if (memo_.size() >= memo_limit_)
        throw GuardError("memo-entries", "--memo-limit",
                         "length memo exceeded " + std::to_string(memo_limit_) + " entries");
    memo_.emplace(key, bits);
    return bits;
}

void LengthEngine::for_each_factorization(const Sequence& B, const std::function<bool(const std::vector<int>&)>& fn)
{
    if (B.sum() != 0)
        throw Error(Errc::not_zero_sum, render(B) + " does not sum to zero");
    unsigned __int128 key = 0;
    int remaining = 0;
    const int zeros = load(B, key, remaining);
    if (zeros > 0) {
        unload();
        throw Error(Errc::invalid_argument, "strip zeros before enumerating factorizations with an engine");
    }
    std::vector<int> chosen;
    try {
        walk(std::numeric_limits<std::size_t>::max(), 0, remaining, chosen, fn);
    } catch (...) {
        unload();
        throw;
    }
    unload();
}

bool LengthEngine::walk(std::size_t prev_min, std::size_t floor_pos, int remaining, std::vector<int>& chosen,
                        const std::function<bool(const std::vector<int>&)>& fn)
{
    if (remaining == 0)
        return fn(chosen);
    std::size_t i = prev_min == std::numeric_limits<std::size_t>::max() ? 0 : prev_min;
    while (current_[i] == 0)
        ++i;
    const auto& bucket = bucket_[i];
    for (std::size_t pos = i == prev_min ? floor_pos : 0; pos < bucket.size(); ++pos) {
        const int a = bucket[pos];
        const AtomCounts& c = counts_[static_cast<std::size_t>(a)];
        bool divides = true;
        for (auto [idx, m] : c.entries)
            if (current_[static_cast<std::size_t>(idx)] < m) {
                divides = false;
                break;
            }
        if (!divides)
            continue;
        for (auto [idx, m] : c.entries)
            current_[static_cast<std::size_t>(idx)] -= m;
        chosen.push_back(a);
        const bool go_on = walk(i, pos, remaining - atoms_[static_cast<std::size_t>(a)].length(), chosen, fn);
        chosen.pop_back();
        for (auto [idx, m] : c.entries)
            current_[static_cast<std::size_t>(idx)] += m;
        if (!go_on)
            return false;
    }
    return true;
}

LengthSet length_set(const Sequence& B)
{
    if (B.sum() != 0)
        throw Error(Errc::not_zero_sum, render(B) + " does not sum to zero");
    const int zeros = B.multiplicity(0);
    const Sequence rest = divide(B, Sequence::power_of(B.group(), 0, zeros));
    if (rest.empty())
        return LengthSet{zeros};
    auto engine = LengthEngine::for_sequence(rest);
    return engine.length_set(rest).shifted(zeros);
}

std::vector<Factorization> enumerate_factorizations(const Sequence& B, std::size_t cap)
{
    if (B.sum() != 0)
        throw Error(Errc::not_zero_sum, render(B) + " does not sum to zero");
    const FiniteAbelianGroup& G = B.group();
    const int zeros = B.multiplicity(0);
    const Sequence rest = divide(B, Sequence::power_of(G, 0, zeros));
    const Sequence zero_atom = Sequence::power_of(G, 0, 1);
    std::vector<Factorization> out;
    auto finish = [&](std::vector<Sequence> atoms) {
        atoms.insert(atoms.begin(), static_cast<std::size_t>(zeros), zero_atom);
        std::sort(atoms.begin(), atoms.end());
        out.push_back({std::move(atoms), B});
    };
    if (rest.empty()) {
        finish({});
        return out;
    }
    auto engine = LengthEngine::for_sequence(rest);
    engine.for_each_factorization(rest, [&](const std::vector<int>& chosen) {
        if (out.size() >= cap)
            throw Error(Errc::too_many_factorizations,
                        render(B) + " has more than " + std::to_string(cap) + " factorizations");
        std::vector<Sequence> atoms;
        for (int a : chosen)
            atoms.push_back(engine.atoms()[static_cast<std::size_t>(a)]);
        finish(std::move(atoms));
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
        if (a.atoms.size() != b.atoms.size())
            return a.atoms.size() < b.atoms.size();
        return std::lexicographical_compare(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end());
    });
    return out;
}

int distance(const Factorization& z, const Factorization& w)
{
    if (!(z.product == w.product))
        throw Error(Errc::different_products, "factorizations of different sequences");
    std::size_t i = 0, j = 0, common = 0;
    while (i < z.atoms.size() && j < w.atoms.size()) {
        if (z.atoms[i] == w.atoms[j]) {
            ++common;
            ++i;
            ++j;
        } else if (z.atoms[i] < w.atoms[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<int>(std::max(z.atoms.size(), w.atoms.size()) - common);
}

int catenary_degree(const std::vector<Factorization>& factorizations)
{
    const std::size_t n = factorizations.size();
    if (n <= 1)
        return 0;
    // Prim on the complete graph; the largest edge of a minimum spanning tree
    // is the bottleneck.
    std::vector<int> best(n, std::numeric_limits<int>::max());
    std::vector<bool> in_tree(n, false);
    best[0] = 0;
    int c = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t u = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!in_tree[v] && (u == n || best[v] < best[u]))
                u = v;
        in_tree[u] = true;
        c = std::max(c, best[u]);
        for (std::size_t v = 0; v < n; ++v)
            if (!in_tree[v])
                best[v] = std::min(best[v], distance(factorizations[u], factorizations[v]));
    }
    return c;
}

int catenary_of_element(const Sequence& B, std::size_t cap)
{
    return catenary_degree(enumerate_factorizations(B, cap));
}

std::vector<PairResult> pair_length_sets(const std::vector<Sequence>& atoms, const PairFilter& filter, int workers)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (filter.negatives_only) {
        std::map<Sequence, std::size_t> index;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            index.emplace(atoms[i], i);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i].length() < filter.min_atom_length)
                continue;
            auto it = index.find(negate(atoms[i]));
            if (it == index.end() || it->second < i)
                continue;
            if (filter.accept && !filter.accept(atoms[i], atoms[it->second]))
                continue;
            pairs.emplace_back(i, it->second);
        }
    } else {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i].length() < filter.min_atom_length)
                continue;
            for (std::size_t j = i; j < atoms.size(); ++j) {
                if (atoms[j].length() < filter.min_atom_length)
                    continue;
                if (filter.accept && !filter.accept(atoms[i], atoms[j]))
                    continue;
                pairs.emplace_back(i, j);
            }
        }
    }
    std::vector<PairResult> out(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        out[k] = {i, j, length_set(atoms[i] * atoms[j])};
    });
    return out;
}

}  // namespace zsl
