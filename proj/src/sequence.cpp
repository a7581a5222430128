#include "zsl/sequence.hpp"

#include "zsl/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace zsl {

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

void check_element(const FiniteAbelianGroup& G, ElementId id)
{
    if (id >= G.order())
        throw Error(Errc::invalid_argument, "element index " + std::to_string(id) + " outside " + G.name());
}

void check_length(const Sequence& S)
{
    if (S.length() > kMaxSubsumLength)
        throw GuardError("max-subsum-length", "--max-subsum-length",
                         "subsequence-sum computation limited to length " + std::to_string(kMaxSubsumLength));
}

}  // namespace

Sequence Sequence::from_ids(const FiniteAbelianGroup& G, const std::vector<ElementId>& ids)
{
    std::vector<std::pair<ElementId, int>> pairs;
    pairs.reserve(ids.size());
    for (ElementId id : ids)
        pairs.emplace_back(id, 1);
    return from_counts(G, pairs);
}

Sequence Sequence::from_counts(const FiniteAbelianGroup& G, const std::vector<std::pair<ElementId, int>>& pairs)
{
    bool canonical = true;
    for (std::size_t i = 0; i < pairs.size() && canonical; ++i)
        canonical = pairs[i].first < G.order() && pairs[i].second > 0
                    && (i == 0 || pairs[i - 1].first < pairs[i].first);
    if (canonical) {
        Sequence S(G);
        S.entries_.reserve(pairs.size());
        for (auto [id, m] : pairs)
            S.entries_.push_back({id, m});
        S.recompute();
        return S;
    }
    std::map<ElementId, int> merged;
    for (auto [id, m] : pairs) {
        check_element(G, id);
        if (m < 0)
            throw Error(Errc::invalid_argument, "negative multiplicity");
        if (m > 0)
            merged[id] += m;
    }
    Sequence S(G);
    for (auto [id, m] : merged)
        S.entries_.push_back({id, m});
    S.recompute();
    return S;
}

Sequence Sequence::power_of(const FiniteAbelianGroup& G, ElementId g, int k)
{
    return from_counts(G, {{g, k}});
}

void Sequence::recompute()
{
    length_ = 0;
    sum_ = 0;
    for (const auto& e : entries_) {
        length_ += e.multiplicity;
        sum_ = group_.add(sum_, group_.multiple(e.element, e.multiplicity));
    }
}

int Sequence::multiplicity(ElementId g) const noexcept
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                               [](const SeqEntry& e, ElementId x) { return e.element < x; });
    return it != entries_.end() && it->element == g ? it->multiplicity : 0;
}

std::vector<ElementId> Sequence::support() const
{
    std::vector<ElementId> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(e.element);
    return out;
}

std::vector<ElementId> Sequence::flatten() const
{
    std::vector<ElementId> out;
    out.reserve(static_cast<std::size_t>(length_));
    for (const auto& e : entries_)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.element);
    return out;
}

bool Sequence::divides(const Sequence& S) const noexcept
{
    for (const auto& e : entries_)
        if (S.multiplicity(e.element) < e.multiplicity)
            return false;
    return true;
}

Sequence Sequence::operator*(const Sequence& other) const
{
    Sequence r = *this;
    r *= other;
    return r;
}

Sequence& Sequence::operator*=(const Sequence& other)
{
    if (other.empty())
        return *this;
    if (empty())
        group_ = other.group_;
    std::vector<SeqEntry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->element < b->element))
            merged.push_back(*a++);
        else if (a == entries_.end() || b->element < a->element)
            merged.push_back(*b++);
        else {
            merged.push_back({a->element, a->multiplicity + b->multiplicity});
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    length_ += other.length_;
    sum_ = group_.add(sum_, other.sum_);
    return *this;
}

Sequence Sequence::pow(int k) const
{
    if (k < 0)
        throw Error(Errc::invalid_argument, "negative exponent");
    Sequence r = *this;
    if (k == 0) {
        r.entries_.clear();
        r.recompute();
        return r;
    }
    for (auto& e : r.entries_)
        e.multiplicity *= k;
    r.recompute();
    return r;
}

bool operator<(const Sequence& a, const Sequence& b) noexcept
{
    if (a.length_ != b.length_)
        return a.length_ < b.length_;
    return a.entries_ < b.entries_;
}

std::size_t SequenceHash::operator()(const Sequence& S) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& e : S.entries()) {
        h = (h ^ e.element) * 0x100000001b3ULL;
        h = (h ^ static_cast<std::size_t>(e.multiplicity)) * 0x100000001b3ULL;
    }
    return h;
}

Sequence apply_map(const Sequence& S, const std::vector<ElementId>& table)
{
    std::vector<std::pair<ElementId, int>> pairs;
    pairs.reserve(S.entries().size());
    for (const auto& e : S.entries())
        pairs.emplace_back(table[e.element], e.multiplicity);
    std::sort(pairs.begin(), pairs.end());
    return Sequence::from_counts(S.group(), pairs);
}

Sequence seq(const FiniteAbelianGroup& G, const std::vector<std::pair<GroupElement, int>>& pairs)
{
    std::vector<std::pair<ElementId, int>> ids;
    ids.reserve(pairs.size());
    for (const auto& [g, m] : pairs)
        ids.emplace_back(G.id_of(g), m);
    return Sequence::from_counts(G, ids);
}

Sequence mul(const Sequence& S, const Sequence& T) { return S * T; }

Sequence divide(const Sequence& S, const Sequence& T)
{
    if (!T.divides(S))
        throw Error(Errc::not_a_subsequence, render(T) + " does not divide " + render(S));
    std::vector<std::pair<ElementId, int>> pairs;
    for (const auto& e : S.entries())
        pairs.emplace_back(e.element, e.multiplicity - T.multiplicity(e.element));
    return Sequence::from_counts(S.group(), pairs);
}

Sequence negate(const Sequence& S)
{
    std::vector<std::pair<ElementId, int>> pairs;
    for (const auto& e : S.entries())
        pairs.emplace_back(S.group().neg(e.element), e.multiplicity);
    return Sequence::from_counts(S.group(), pairs);
}

bool is_zero_sum_free(const Sequence& S)
{
    if (S.multiplicity(0) > 0)
        return false;
    check_length(S);
    const auto& G = S.group();
    ElementSet reach(G.order());
    for (const auto& e : S.entries()) {
        for (int i = 0; i < e.multiplicity; ++i) {
            reach.absorb(G, e.element);
            if (reach.contains(0))
                return false;
        }
    }
    return true;
}

ElementSet proper_subsequence_sums(const Sequence& S)
{
    check_length(S);
    const auto& G = S.group();
    ElementSet out(G.order());
    // a proper subsequence misses at least one element: T = S g^{-1} ranges over
    // the maximal proper subsequences, and their subsequence sums cover all.
    for (const auto& skip : S.entries()) {
        ElementSet reach(G.order());
        for (const auto& e : S.entries()) {
            const int m = e.element == skip.element ? e.multiplicity - 1 : e.multiplicity;
            for (int i = 0; i < m; ++i)
                reach.absorb(G, e.element);
        }
        out |= reach;
    }
    return out;
}

Rational g_norm(const Sequence& S, ElementId g)
{
    const auto& G = S.group();
    const int n = G.order_of(g);
    if (n < 2)
        throw Error(Errc::invalid_argument, "g-norm needs an element of order at least 2");
    std::vector<int> coefficient(G.order(), 0);
    ElementId x = 0;
    for (int k = 1; k <= n; ++k) {
        x = G.add(x, g);
        coefficient[x] = k;
    }
    std::int64_t total = 0;
    for (const auto& e : S.entries()) {
        if (coefficient[e.element] == 0)
            throw Error(Errc::not_in_cyclic_span, render(G, e.element) + " is not in <" + render(G, g) + ">");
        total += static_cast<std::int64_t>(coefficient[e.element]) * e.multiplicity;
    }
    return Rational(total, n);
}

Rational cross_number(const Sequence& S)
{
    Rational k(0);
    for (const auto& e : S.entries()) {
        if (e.element == 0)
            throw Error(Errc::zero_element_in_cross_number, "cross number undefined for sequences containing 0");
        k += Rational(e.multiplicity, S.group().order_of(e.element));
    }
    return k;
}

Sequence parse_sequence(const FiniteAbelianGroup& G, std::string_view text)
{
    std::vector<std::pair<ElementId, int>> pairs;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw Error(Errc::parse_error, what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&](long long& value) {
        skip_ws();
        const char* begin = text.data() + pos;
        if (pos < text.size() && text[pos] == '+')
            ++begin, ++pos;
        auto [end, ec] = std::from_chars(begin, text.data() + text.size(), value);
        if (ec != std::errc())
            fail("expected integer");
        pos = static_cast<std::size_t>(end - text.data());
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            fail("expected '('");
        ++pos;
        std::vector<long long> coords;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
        } else {
            while (true) {
                long long c = 0;
                read_int(c);
                coords.push_back(c);
                skip_ws();
                if (pos >= text.size())
                    fail("unterminated element");
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                if (text[pos] != ',')
                    fail("expected ',' or ')'");
                ++pos;
            }
        }
        if (coords.size() != static_cast<std::size_t>(G.rank()))
            fail("element has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(G.rank()));
        GroupElement g;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const long long n = G.invariant_factors()[i];
            g.coords.push_back(static_cast<int>(((coords[i] % n) + n) % n));
        }
        long long m = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            read_int(m);
            if (m < 0)
                fail("negative multiplicity");
        }
        pairs.emplace_back(G.id_of(g), static_cast<int>(m));
        const std::size_t before = pos;
        skip_ws();
        if (pos < text.size() && pos == before)
            fail("expected whitespace between terms");
    }
    return Sequence::from_counts(G, pairs);
}

std::string render(const Sequence& S)
{
    std::string out;
    for (const auto& e : S.entries()) {
        if (!out.empty())
            out += ' ';
        out += render(S.group(), e.element);
        if (e.multiplicity != 1)
            out += '^' + std::to_string(e.multiplicity);
    }
    return out;
}

}  // namespace zsl
