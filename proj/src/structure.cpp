#include "zsl/structure.hpp"

#include "zsl/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace zsl {

namespace {

int floor_mod(int a, int d)
{
    const int r = a % d;
    return r < 0 ? r + d : r;
}

void check_period(int d, const std::vector<int>& period)
{
    if (d < 1)
        throw Error(Errc::invalid_argument, "difference must be >= 1");
    bool has0 = false, hasd = false;
    for (int p : period) {
        if (p < 0 || p > d)
            throw Error(Errc::invalid_argument, "period element " + std::to_string(p) + " outside [0, d]");
        has0 |= p == 0;
        hasd |= p == d;
    }
    if (!has0 || !hasd)
        throw Error(Errc::invalid_argument, "period must contain 0 and d");
}

/// Residues mod d of the period.
std::vector<char> residues(int d, const std::vector<int>& period)
{
    std::vector<char> r(static_cast<std::size_t>(d), 0);
    for (int p : period)
        r[static_cast<std::size_t>(p % d)] = 1;
    return r;
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int parse_int(const std::string& s, const std::string& what)
{
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw Error(Errc::parse_error, "bad integer '" + s + "' for " + what);
    return v;
}

void need(bool ok, const std::string& message)
{
    if (!ok)
        throw Error(Errc::invalid_argument, message);
}

}  // namespace

bool is_interval(const LengthSet& L)
{
    if (L.empty())
        throw Error(Errc::invalid_argument, "empty set");
    return static_cast<int>(L.size()) == L.max() - L.min() + 1;
}

std::optional<AmpDescriptor> is_amp(const LengthSet& L, int d, const std::vector<int>& period)
{
    check_period(d, period);
    if (L.empty())
        throw Error(Errc::invalid_argument, "empty set");
    const auto res = residues(d, period);
    const int lo = L.min();
    const int hi = L.max();
    for (int v = lo; v <= hi; ++v)
        if (static_cast<bool>(res[static_cast<std::size_t>(floor_mod(v - lo, d))]) != L.contains(v))
            return std::nullopt;
    AmpDescriptor out;
    out.d = d;
    out.period = sorted_unique(period);
    out.offset = lo;
    while (L.contains(lo + (out.ell + 1) * d))
        ++out.ell;
    return out;
}

std::vector<AmpDescriptor> amp_decompositions(const LengthSet& L)
{
    if (L.empty())
        throw Error(Errc::invalid_argument, "empty set");
    const int span = L.max() - L.min();
    if (span > kAmpMaxSpan)
        throw GuardError("amp-span", "--max-span", "AMP search limited to max L - min L <= 64");
    std::vector<AmpDescriptor> out;
    const int top = std::max(1, std::min(kAmpMaxDifference, span));
    for (int d = 1; d <= top; ++d) {
        for (unsigned mask = 0; mask < (1U << (d - 1)); ++mask) {
            std::vector<int> period{0};
            for (int p = 1; p < d; ++p)
                if (mask & (1U << (p - 1)))
                    period.push_back(p);
            period.push_back(d);
            if (auto a = is_amp(L, d, period))
                out.push_back(*a);
        }
        auto first = out.begin();
        while (first != out.end() && first->d != d)
            ++first;
        std::sort(first, out.end(), [](const AmpDescriptor& a, const AmpDescriptor& b) { return a.period < b.period; });
    }
    return out;
}

std::optional<AampDescriptor> is_aamp(const LengthSet& L, int d, const std::vector<int>& period, int M)
{
    check_period(d, period);
    if (M < 0)
        throw Error(Errc::invalid_argument, "bound M must be >= 0");
    if (L.empty())
        throw Error(Errc::invalid_argument, "empty set");
    const auto res = residues(d, period);
    for (int y : L.values()) {
        std::vector<int> shifted;
        bool periodic = true;
        for (int v : L.values()) {
            shifted.push_back(v - y);
            periodic &= static_cast<bool>(res[static_cast<std::size_t>(floor_mod(v - y, d))]);
        }
        if (!periodic)
            continue;
        std::vector<int> initial;
        for (int v : shifted)
            if (v < 0)
                initial.push_back(v);
        if (!initial.empty() && initial.front() < -M)
            continue;
        for (auto it = shifted.rbegin(); it != shifted.rend() && *it >= 0; ++it) {
            const int t = *it;
            bool ok = true;
            std::vector<int> central, final;
            for (int v : shifted) {
                if (v < 0)
                    continue;
                if (v > t) {
                    if (v > t + M) {
                        ok = false;
                        break;
                    }
                    final.push_back(v);
                } else {
                    central.push_back(v);
                }
            }
            if (!ok)
                continue;
            // L* must be all of (period + dZ) ∩ [0, t]
            std::size_t expected = 0;
            for (int v = 0; v <= t; ++v)
                expected += res[static_cast<std::size_t>(v % d)] ? 1 : 0;
            if (central.size() != expected)
                continue;
            AampDescriptor out;
            out.core = *is_amp(LengthSet(central), d, period);
            out.M = M;
            out.y = y;
            out.initial = initial;
            out.central = central;
            out.final = final;
            return out;
        }
    }
    return std::nullopt;
}

nlohmann::json to_json(const AmpDescriptor& a)
{
    return {{"d", a.d}, {"period", a.period}, {"ell", a.ell}, {"offset", a.offset}};
}

nlohmann::json to_json(const AampDescriptor& a)
{
    auto j = to_json(a.core);
    j["offset"] = a.y;
    j["M"] = a.M;
    j["y"] = a.y;
    j["initial"] = a.initial;
    j["central"] = a.central;
    j["final"] = a.final;
    return j;
}

LengthSet family_theorem_a(int y, int k)
{
    need(y >= 0 && k >= 0, "theorem_a needs y, k >= 0");
    return LengthSet::interval(y + 2 * k, y + 3 * k);
}

LengthSet family_lemma72(int y, int k)
{
    need(y >= 0 && k >= 0, "lemma72 needs y, k >= 0");
    std::vector<int> v;
    for (int i = 0; i <= k; ++i)
        v.push_back(y + 2 * k + 3 * i);
    return LengthSet(v);
}

LengthSet family_lemma54(int k)
{
    need(k >= 0, "lemma54 needs k >= 0");
    std::vector<int> v;
    for (int i = 0; i <= 2 * k; ++i)
        v.push_back(3 * k + 2 * i);
    return LengthSet(v);
}

std::vector<LengthSet> family_prop53(int n)
{
    need(n >= 2, "prop53 needs n >= 2");
    std::set<LengthSet> out;
    for (int m = 1; m <= n; ++m)
        out.insert(LengthSet{2, 2 * m, 2 * n - 2 * m + 2, 2 * n, 2 * n + 1});
    for (int v = 3; v <= 2 * n - 3; v += 2) {
        std::vector<int> L{2};
        for (int i = 0; i <= (v - 1) / 2; ++i) {
            L.push_back(2 * n - 2 * i);
            L.push_back(2 * n + 1 - 2 * i);
        }
        out.insert(LengthSet(L));
    }
    return {out.begin(), out.end()};
}

namespace {

const std::map<std::string, std::vector<int>>& amp4_bases()
{
    static const std::map<std::string, std::vector<int>> bases{
        {"1a", {4, 5, 6, 8}},        {"1b", {4, 5, 6, 8, 9}},  {"1c", {5, 6, 7, 9, 10, 11}},
        {"2a", {3, 4, 6, 7}},        {"2b", {4, 5, 7, 8, 9}},  {"2c", {5, 6, 8, 9, 10, 12}},
        {"3a", {3, 5, 6, 7}},        {"3b", {4, 6, 7, 8, 10}}, {"3c", {4, 6, 7, 8, 10, 11}},
    };
    return bases;
}

}  // namespace

const std::vector<std::string>& amp4_c6_cases()
{
    static const std::vector<std::string> cases{"1a", "1b", "1c", "2a", "2b", "2c", "3a", "3b", "3c"};
    return cases;
}

std::vector<int> amp4_c6_period(const std::string& which)
{
    need(amp4_bases().count(which) == 1, "unknown amp4_c6 case '" + which + "'");
    switch (which[0]) {
    case '1': return {0, 1, 2, 4};
    case '2': return {0, 1, 3, 4};
    default: return {0, 2, 3, 4};
    }
}

LengthSet family_amp4_c6(const std::string& which, int y, int k)
{
    auto it = amp4_bases().find(which);
    need(it != amp4_bases().end(), "unknown amp4_c6 case '" + which + "'");
    need(y >= 0 && k >= 0, "amp4_c6 needs y, k >= 0");
    std::vector<int> v;
    for (int b : it->second)
        for (int i = 0; i <= k; ++i)
            v.push_back(y + 2 * k + b + 4 * i);
    return LengthSet(v);
}

std::vector<LengthSet> family(const std::string& name, const std::vector<std::string>& params)
{
    auto arity = [&](std::size_t n) {
        if (params.size() != n)
            throw Error(Errc::invalid_argument,
                        "family " + name + " takes " + std::to_string(n) + " parameters, got "
                            + std::to_string(params.size()));
    };
    if (name == "theorem_a") {
        arity(2);
        return {family_theorem_a(parse_int(params[0], "y"), parse_int(params[1], "k"))};
    }
    if (name == "lemma72") {
        arity(2);
        return {family_lemma72(parse_int(params[0], "y"), parse_int(params[1], "k"))};
    }
    if (name == "lemma54") {
        arity(1);
        return {family_lemma54(parse_int(params[0], "k"))};
    }
    if (name == "prop53") {
        arity(1);
        return family_prop53(parse_int(params[0], "n"));
    }
    if (name == "amp4_c6") {
        arity(3);
        return {family_amp4_c6(params[0], parse_int(params[1], "y"), parse_int(params[2], "k"))};
    }
    throw Error(Errc::invalid_argument, "unknown family '" + name + "'");
}

}  // namespace zsl
