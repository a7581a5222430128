#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsl {

/// Dense index of a group element. Indices follow the lexicographic order of
/// coordinate vectors, so index order is the canonical element order and the
/// zero element is always index 0.
using ElementId = std::uint32_t;

struct GroupElement {
    std::vector<int> coords;

    auto operator<=>(const GroupElement&) const = default;
};

/// G = C_{n1} + ... + C_{nr} with 1 < n1 | n2 | ... | nr. Immutable; copies
/// share the underlying tables.
class FiniteAbelianGroup {
public:
    /// The trivial group (empty factor list).
    FiniteAbelianGroup();

    /// Requires an invariant-factor chain; use make_group for arbitrary lists.
    static FiniteAbelianGroup from_invariant_factors(std::vector<int> factors);

    const std::vector<int>& invariant_factors() const noexcept;
    std::size_t order() const noexcept;
    int exponent() const noexcept;
    int rank() const noexcept;

    /// "2,2,4"; empty for the trivial group.
    std::string spec() const;
    /// "C2xC2xC4"; "C1" for the trivial group.
    std::string name() const;

    bool contains(const GroupElement& g) const noexcept;
    ElementId id_of(const GroupElement& g) const;
    GroupElement element(ElementId id) const;
    int coordinate(ElementId id, int i) const;

    ElementId add(ElementId a, ElementId b) const noexcept;
    ElementId sub(ElementId a, ElementId b) const noexcept;
    ElementId neg(ElementId a) const noexcept;
    ElementId multiple(ElementId a, long long k) const noexcept;
    int order_of(ElementId a) const noexcept;
    static constexpr ElementId zero_id() noexcept { return 0; }

    /// Element given by coordinates (reduced modulo each factor).
    ElementId from_coords(std::span<const long long> coords) const noexcept;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) noexcept;

private:
    struct Tables;
    explicit FiniteAbelianGroup(std::shared_ptr<const Tables> t);
    std::shared_ptr<const Tables> t_;
};

/// Canonicalizes an arbitrary list of cyclic orders (each >= 2) into
/// invariant-factor form by splitting into prime powers and regrouping.
FiniteAbelianGroup make_group(std::span<const int> factors);
FiniteAbelianGroup make_group(std::initializer_list<int> factors);

/// The direct sum C_{f1} + ... + C_{fk} together with the images of its
/// standard generators in the invariant-factor presentation.
struct Presentation {
    FiniteAbelianGroup group;
    std::vector<ElementId> generators;

    /// sum_i c_i * generator_i
    ElementId combine(std::span<const long long> coefficients) const;
    ElementId combine(std::initializer_list<long long> coefficients) const;
};

Presentation present_direct_sum(std::span<const int> factors);
Presentation present_direct_sum(std::initializer_list<int> factors);

/// Parses a group spec string such as "2,2,4" (any factor order).
FiniteAbelianGroup parse_group_spec(std::string_view spec);

GroupElement add(const FiniteAbelianGroup& G, const GroupElement& g, const GroupElement& h);
GroupElement neg(const FiniteAbelianGroup& G, const GroupElement& g);
GroupElement zero(const FiniteAbelianGroup& G);
int element_order(const FiniteAbelianGroup& G, const GroupElement& g);
std::vector<GroupElement> elements(const FiniteAbelianGroup& G);

/// 1 + sum (n_i - 1)
int d_star(const FiniteAbelianGroup& G);

/// Every abelian group of order n up to isomorphism, ordered by invariant
/// factors (rank descending first, so C_2^k comes before C_{2^k}).
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::size_t n);

bool is_cyclic(const FiniteAbelianGroup& G) noexcept;
bool is_elementary_2_group(const FiniteAbelianGroup& G) noexcept;

/// Every automorphism of G as a lookup table (table[x] = image of x).
/// Throws GuardError when |Aut(G)| * |G| would exceed max_entries.
std::vector<std::vector<ElementId>> automorphism_tables(const FiniteAbelianGroup& G,
                                                        std::size_t max_entries = 50'000'000);

/// "(1,0,3)"
std::string render(const FiniteAbelianGroup& G, ElementId id);

/// Bitset over the elements of one group.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t order) : bits_((order + 63) / 64, 0), order_(order) {}

    void insert(ElementId id) noexcept { bits_[id >> 6] |= std::uint64_t{1} << (id & 63); }
    bool contains(ElementId id) const noexcept { return (bits_[id >> 6] >> (id & 63)) & 1U; }
    bool empty() const noexcept;
    std::size_t size() const noexcept;
    std::size_t order() const noexcept { return order_; }

    /// this |= (this + x) | {x}
    void absorb(const FiniteAbelianGroup& G, ElementId x);
    std::vector<ElementId> to_vector() const;
    ElementSet& operator|=(const ElementSet& other) noexcept;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    std::vector<std::uint64_t> bits_;
    std::size_t order_ = 0;
};

}  // namespace zsl
