#pragma once

#include "zsl/group.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsl {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

struct SeqEntry {
    ElementId element = 0;
    int multiplicity = 0;

    friend bool operator==(const SeqEntry&, const SeqEntry&) = default;
    friend auto operator<=>(const SeqEntry&, const SeqEntry&) = default;
};

/// A finite multiset over a group, stored as (element, multiplicity) pairs in
/// increasing element order. Length and sum are maintained.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(FiniteAbelianGroup G) : group_(std::move(G)) {}

    /// Accepts unsorted ids with repeats.
    static Sequence from_ids(const FiniteAbelianGroup& G, const std::vector<ElementId>& ids);
    /// Pairs with multiplicity 0 are dropped, repeats merged.
    static Sequence from_counts(const FiniteAbelianGroup& G, const std::vector<std::pair<ElementId, int>>& pairs);
    /// g^k
    static Sequence power_of(const FiniteAbelianGroup& G, ElementId g, int k);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    const std::vector<SeqEntry>& entries() const noexcept { return entries_; }
    int length() const noexcept { return length_; }
    ElementId sum() const noexcept { return sum_; }
    bool empty() const noexcept { return length_ == 0; }

    int multiplicity(ElementId g) const noexcept;
    std::vector<ElementId> support() const;
    /// Elements with repetition, in canonical order.
    std::vector<ElementId> flatten() const;

    bool divides(const Sequence& S) const noexcept;  // this | S

    Sequence operator*(const Sequence& other) const;
    Sequence& operator*=(const Sequence& other);
    Sequence pow(int k) const;

    friend bool operator==(const Sequence& a, const Sequence& b) noexcept
    {
        return a.entries_ == b.entries_;
    }
    /// Canonical order: by length, then entry list.
    friend bool operator<(const Sequence& a, const Sequence& b) noexcept;

private:
    void recompute();

    FiniteAbelianGroup group_;
    std::vector<SeqEntry> entries_;
    int length_ = 0;
    ElementId sum_ = 0;
};

struct SequenceHash {
    std::size_t operator()(const Sequence& S) const noexcept;
};

/// Image of S under a group automorphism given as a lookup table.
Sequence apply_map(const Sequence& S, const std::vector<ElementId>& table);

Sequence seq(const FiniteAbelianGroup& G, const std::vector<std::pair<GroupElement, int>>& pairs);
Sequence mul(const Sequence& S, const Sequence& T);
/// T^{-1} S
Sequence divide(const Sequence& S, const Sequence& T);
Sequence negate(const Sequence& S);

bool is_zero_sum_free(const Sequence& S);
/// Sums of nonempty proper subsequences.
ElementSet proper_subsequence_sums(const Sequence& S);

/// ||S||_g; every element of S must lie in <g>.
Rational g_norm(const Sequence& S, ElementId g);
Rational cross_number(const Sequence& S);

/// Literal grammar: whitespace separated "(c1,...,cr)^m", "^1" optional.
Sequence parse_sequence(const FiniteAbelianGroup& G, std::string_view text);
std::string render(const Sequence& S);

constexpr int kMaxSubsumLength = 64;

}  // namespace zsl
