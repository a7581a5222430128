#pragma once

#include "zsl/lengths.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zsl {

/// Successive differences of L, as a sorted set.
std::vector<int> delta_of(const LengthSet& L);
/// max L / min L; 1 for {0}.
Rational rho_of(const LengthSet& L);

/// Every nonempty zero-sum B over `subset` with |B| <= max_length.
void for_each_zero_sum(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int max_length,
                       const std::function<void(const Sequence&)>& visit);

/// Union of delta_of(L(B)) over zero-sum B over G0 with |B| <= size_bound.
std::vector<int> delta_bounded(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int size_bound);

/// Per-subset data gathered from all zero-sum B over G with |B| <= bound.
/// Subsets are bitmasks over element ids. After construction each entry
/// aggregates every B whose support lies inside the mask.
struct SubsetSweep {
    FiniteAbelianGroup group;
    int bound = 0;
    std::vector<std::uint64_t> delta_bits;  // bit d set iff d observed
    std::vector<int> max_catenary;          // -1 when not requested
    bool has_catenary = false;
};

SubsetSweep subset_sweep(const FiniteAbelianGroup& G, int size_bound, bool with_catenary = false);

int gcd_of_bits(std::uint64_t bits);
std::vector<int> bits_to_values(std::uint64_t bits);

struct DeltaStarResult {
    std::vector<int> values;  // distinct gcds over subsets without 0
    std::vector<std::pair<std::uint32_t, int>> per_subset;  // (mask, gcd) for subsets without 0
    bool zero_conventions_agree = true;
};

constexpr std::size_t kSubsetSweepMaxOrder = 16;

DeltaStarResult delta_star_bounded(const FiniteAbelianGroup& G, int size_bound,
                                   std::size_t max_order = kSubsetSweepMaxOrder);

struct RhoGuard {
    int max_k = 3;
    std::size_t max_atoms = 20000;
};

int rho_k(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int k, RhoGuard guard = {});
int rho_k(const std::vector<Sequence>& atoms, int k, RhoGuard guard = {});

struct DalethResult {
    int value = 0;
    std::size_t first = 0;   // witness pair (indices into the atom list)
    std::size_t second = 0;
    LengthSet witness_lengths;
};

/// Indices of one atom per orbit under the automorphisms of G that fix G0
/// (the union of the supports), first in list order. Every atom is its own
/// representative when Aut(G) is too large to tabulate. The list must be
/// A(G0).
std::vector<std::size_t> orbit_representatives(const std::vector<Sequence>& atoms);

/// Exact over all atom pairs of the list, which must be A(G0) for some G0
/// (the search uses the symmetries of G0).
DalethResult daleth(const std::vector<Sequence>& atoms);
int daleth(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset);
int daleth(const FiniteAbelianGroup& G);

/// Every atom over G0 other than (0) has cross number >= 1.
bool is_lcn_set(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset);

struct MResult {
    int value = 0;           // 0 when no LCN subset has an observed distance
    std::uint32_t witness = 0;
};

MResult m_bounded(const FiniteAbelianGroup& G, int size_bound, std::size_t max_order = kSubsetSweepMaxOrder);

struct InvariantReport {
    std::string invariant;
    std::string group;
    std::string subset;
    std::variant<int, Rational, std::vector<int>> value;
    std::optional<int> bound;  // set iff bounded
    std::string search_space;

    nlohmann::json to_json() const;
};

}  // namespace zsl
