#pragma once

#include "zsl/atoms.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace zsl {

/// A finite set of non-negative integers, kept sorted.
class LengthSet {
public:
    LengthSet() = default;
    LengthSet(std::initializer_list<int> values);
    explicit LengthSet(std::vector<int> values);
    static LengthSet from_bits(std::uint64_t bits);
    static LengthSet interval(int lo, int hi);

    const std::vector<int>& values() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }
    int min() const;
    int max() const;
    bool contains(int v) const noexcept;
    bool contains_all(const LengthSet& other) const noexcept;
    LengthSet shifted(int k) const;

    friend bool operator==(const LengthSet&, const LengthSet&) = default;
    friend auto operator<=>(const LengthSet&, const LengthSet&) = default;

private:
    std::vector<int> values_;
};

/// "{2,4,5}"
std::string to_string(const LengthSet& L);
/// Accepts "2,4,5", "{2,4,5}" and ranges like "[4,11]" or "4-11" inside a list.
LengthSet parse_length_set(std::string_view text);

struct U128Hash {
    std::size_t operator()(unsigned __int128 x) const noexcept
    {
        const auto lo = static_cast<std::uint64_t>(x);
        const auto hi = static_cast<std::uint64_t>(x >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

/// Computes sets of lengths for sequences over a fixed support with fixed
/// per-element multiplicity bounds, sharing one memo across queries.
class LengthEngine {
public:
    /// `atoms` must contain every atom over `support` whose multiplicities
    /// respect `caps`; extra atoms are ignored.
    LengthEngine(FiniteAbelianGroup G, std::vector<ElementId> support, std::vector<int> caps,
                 const std::vector<Sequence>& atoms);

    /// All atoms over `subset` with every multiplicity at most `cap`.
    static LengthEngine for_subset(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int cap);
    /// All atoms dividing B.
    static LengthEngine for_sequence(const Sequence& B);

    /// Bit i set iff i is in L(B).
    std::uint64_t length_bits(const Sequence& B);
    LengthSet length_set(const Sequence& B) { return LengthSet::from_bits(length_bits(B)); }

    const std::vector<Sequence>& atoms() const noexcept { return atoms_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }
    void set_memo_limit(std::size_t limit) noexcept { memo_limit_ = limit; }

    struct AtomCounts {
        std::vector<std::pair<int, int>> entries;  // (support index, multiplicity)
        unsigned __int128 key = 0;
    };

    /// Visits each factorization of B as a list of atom indices, each
    /// factorization once.
    void for_each_factorization(const Sequence& B, const std::function<bool(const std::vector<int>&)>& fn);

private:
    std::uint64_t solve(std::size_t start, unsigned __int128 key, int remaining);
    bool walk(std::size_t prev_min, std::size_t floor_pos, int remaining, std::vector<int>& chosen,
              const std::function<bool(const std::vector<int>&)>& fn);
    /// Loads the nonzero part of B into current_; returns the number of zeros.
    int load(const Sequence& B, unsigned __int128& key, int& remaining);
    void unload() noexcept;

    FiniteAbelianGroup G_;
    std::vector<ElementId> support_;
    std::vector<int> caps_;
    std::vector<unsigned __int128> radix_;
    std::vector<int> index_of_;                    // element id -> support index or -1
    std::vector<Sequence> atoms_;
    std::vector<AtomCounts> counts_;
    std::vector<std::vector<int>> bucket_;          // support index -> atoms whose least element it is
    std::vector<int> current_;
    std::unordered_map<unsigned __int128, std::uint64_t, U128Hash> memo_;
    std::size_t memo_limit_ = 10'000'000;
};

/// L(B); σ(B) must be 0.
LengthSet length_set(const Sequence& B);

struct Factorization {
    std::vector<Sequence> atoms;  // sorted canonically
    Sequence product;

    int length() const noexcept { return static_cast<int>(atoms.size()); }
    friend bool operator==(const Factorization& a, const Factorization& b) { return a.atoms == b.atoms; }
};

constexpr std::size_t kDefaultFactorizationCap = 1'000'000;

std::vector<Factorization> enumerate_factorizations(const Sequence& B,
                                                    std::size_t cap = kDefaultFactorizationCap);
int distance(const Factorization& z, const Factorization& w);
/// Largest edge of a minimum bottleneck spanning tree on Z(B).
int catenary_degree(const std::vector<Factorization>& factorizations);
int catenary_of_element(const Sequence& B, std::size_t cap = kDefaultFactorizationCap);

struct PairFilter {
    int min_atom_length = 1;
    /// Only pairs (U, -U).
    bool negatives_only = false;
    /// Extra predicate on (U, V); both are atoms from the list, index(U) <= index(V).
    std::function<bool(const Sequence&, const Sequence&)> accept;
};

struct PairResult {
    std::size_t first = 0;   // indices into the atom list
    std::size_t second = 0;
    LengthSet lengths;
};

/// L(UV) for every unordered pair {U, V} (U = V allowed) of atoms passing the
/// filter. Results are ordered by (first, second).
std::vector<PairResult> pair_length_sets(const std::vector<Sequence>& atoms, const PairFilter& filter,
                                         int workers = 1);

}  // namespace zsl
