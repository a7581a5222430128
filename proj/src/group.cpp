#include "zsl/group.hpp"

#include "zsl/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace zsl {

namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 22;
constexpr std::size_t kAddTableOrder = 512;

std::vector<std::pair<int, int>> prime_powers(int n)
{
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= n; ++p) {
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        if (a > 0)
            out.emplace_back(p, a);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

int ipow(int p, int a)
{
    int r = 1;
    while (a-- > 0)
        r *= p;
    return r;
}

long long mod(long long a, long long n)
{
    long long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

struct FiniteAbelianGroup::Tables {
    std::vector<int> factors;
    std::vector<std::size_t> weights;  // coordinate i contributes coords[i] * weights[i]
    std::size_t order = 1;
    std::vector<ElementId> add;        // order*order, only for small groups
    std::vector<ElementId> neg;
    std::vector<int> element_order;

    ElementId add_slow(ElementId a, ElementId b) const noexcept
    {
        ElementId r = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const int n = factors[i];
            const int ca = static_cast<int>((a / weights[i]) % n);
            const int cb = static_cast<int>((b / weights[i]) % n);
            r += static_cast<ElementId>(((ca + cb) % n) * weights[i]);
        }
        return r;
    }
};

FiniteAbelianGroup::FiniteAbelianGroup() : FiniteAbelianGroup(from_invariant_factors({})) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<int> factors)
{
    std::size_t order = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw Error(Errc::invalid_argument, "cyclic factor must be >= 2, got " + std::to_string(factors[i]));
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw Error(Errc::invalid_argument, "factors do not form a divisibility chain");
        order *= static_cast<std::size_t>(factors[i]);
        if (order > kMaxOrder)
            throw GuardError("max-group-order", "", "group order exceeds " + std::to_string(kMaxOrder));
    }

    auto t = std::make_shared<Tables>();
    t->factors = std::move(factors);
    t->order = order;
    const std::size_t r = t->factors.size();
    t->weights.assign(r, 1);
    for (std::size_t i = r; i-- > 1;)
        t->weights[i - 1] = t->weights[i] * static_cast<std::size_t>(t->factors[i]);

    t->neg.resize(order);
    t->element_order.resize(order);
    for (std::size_t id = 0; id < order; ++id) {
        ElementId n = 0;
        long long lcm = 1;
        for (std::size_t i = 0; i < r; ++i) {
            const int f = t->factors[i];
            const int c = static_cast<int>((id / t->weights[i]) % f);
            n += static_cast<ElementId>(((f - c) % f) * t->weights[i]);
            lcm = std::lcm(lcm, static_cast<long long>(f / std::gcd(f, c)));
        }
        t->neg[id] = n;
        t->element_order[id] = static_cast<int>(lcm);
    }
    if (order <= kAddTableOrder) {
        t->add.resize(order * order);
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b)
                t->add[a * order + b] = t->add_slow(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
    return FiniteAbelianGroup(std::move(t));
}

const std::vector<int>& FiniteAbelianGroup::invariant_factors() const noexcept { return t_->factors; }
std::size_t FiniteAbelianGroup::order() const noexcept { return t_->order; }
int FiniteAbelianGroup::exponent() const noexcept { return t_->factors.empty() ? 1 : t_->factors.back(); }
int FiniteAbelianGroup::rank() const noexcept { return static_cast<int>(t_->factors.size()); }

std::string FiniteAbelianGroup::spec() const
{
    std::string s;
    for (std::size_t i = 0; i < t_->factors.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(t_->factors[i]);
    }
    return s;
}

std::string FiniteAbelianGroup::name() const
{
    if (t_->factors.empty())
        return "C1";
    std::string s;
    for (std::size_t i = 0; i < t_->factors.size(); ++i) {
        if (i > 0)
            s += 'x';
        s += 'C' + std::to_string(t_->factors[i]);
    }
    return s;
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const noexcept
{
    if (g.coords.size() != t_->factors.size())
        return false;
    for (std::size_t i = 0; i < g.coords.size(); ++i)
        if (g.coords[i] < 0 || g.coords[i] >= t_->factors[i])
            return false;
    return true;
}

ElementId FiniteAbelianGroup::id_of(const GroupElement& g) const
{
    if (g.coords.size() != t_->factors.size())
        throw Error(Errc::invalid_argument, "element has " + std::to_string(g.coords.size())
                                                + " coordinates, group " + name() + " has rank "
                                                + std::to_string(rank()));
    if (!contains(g))
        throw Error(Errc::invalid_argument, "coordinate out of range for " + name());
    ElementId id = 0;
    for (std::size_t i = 0; i < g.coords.size(); ++i)
        id += static_cast<ElementId>(g.coords[i] * t_->weights[i]);
    return id;
}

GroupElement FiniteAbelianGroup::element(ElementId id) const
{
    GroupElement g;
    g.coords.resize(t_->factors.size());
    for (std::size_t i = 0; i < g.coords.size(); ++i)
        g.coords[i] = coordinate(id, static_cast<int>(i));
    return g;
}

int FiniteAbelianGroup::coordinate(ElementId id, int i) const
{
    return static_cast<int>((id / t_->weights[i]) % t_->factors[i]);
}

ElementId FiniteAbelianGroup::add(ElementId a, ElementId b) const noexcept
{
    if (!t_->add.empty())
        return t_->add[a * t_->order + b];
    return t_->add_slow(a, b);
}

ElementId FiniteAbelianGroup::sub(ElementId a, ElementId b) const noexcept { return add(a, t_->neg[b]); }
ElementId FiniteAbelianGroup::neg(ElementId a) const noexcept { return t_->neg[a]; }
int FiniteAbelianGroup::order_of(ElementId a) const noexcept { return t_->element_order[a]; }

ElementId FiniteAbelianGroup::multiple(ElementId a, long long k) const noexcept
{
    ElementId r = 0;
    for (std::size_t i = 0; i < t_->factors.size(); ++i) {
        const int f = t_->factors[i];
        r += static_cast<ElementId>(mod(static_cast<long long>(coordinate(a, static_cast<int>(i))) * mod(k, f), f)
                                    * static_cast<long long>(t_->weights[i]));
    }
    return r;
}

ElementId FiniteAbelianGroup::from_coords(std::span<const long long> coords) const noexcept
{
    ElementId r = 0;
    for (std::size_t i = 0; i < t_->factors.size() && i < coords.size(); ++i)
        r += static_cast<ElementId>(mod(coords[i], t_->factors[i]) * static_cast<long long>(t_->weights[i]));
    return r;
}

bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) noexcept
{
    return a.t_ == b.t_ || a.t_->factors == b.t_->factors;
}

Presentation present_direct_sum(std::span<const int> factors)
{
    // prime -> list of (exponent, source factor index)
    std::map<int, std::vector<std::pair<int, std::size_t>>> by_prime;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw Error(Errc::invalid_argument, "cyclic factor must be >= 2, got " + std::to_string(factors[i]));
        for (auto [p, a] : prime_powers(factors[i]))
            by_prime[p].emplace_back(a, i);
    }
    std::size_t r = 0;
    for (auto& [p, list] : by_prime) {
        std::stable_sort(list.begin(), list.end(), [](auto& x, auto& y) { return x.first > y.first; });
        r = std::max(r, list.size());
    }
    // the k-th largest power of p goes into invariant factor r-1-k
    std::vector<int> inv(r, 1);
    for (auto& [p, list] : by_prime)
        for (std::size_t k = 0; k < list.size(); ++k)
            inv[r - 1 - k] *= ipow(p, list[k].first);

    Presentation pres{FiniteAbelianGroup::from_invariant_factors(inv), {}};
    std::vector<std::vector<long long>> images(factors.size(), std::vector<long long>(r, 0));
    for (auto& [p, list] : by_prime) {
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::size_t slot = r - 1 - k;
            const long long pa = ipow(p, list[k].first);
            const long long n = inv[slot];
            const long long q = n / pa;
            // CRT idempotent: 1 mod p^a, 0 mod q
            long long qinv = 0;
            for (long long x = 0; x < pa; ++x)
                if ((q * x) % pa == 1 % pa) {
                    qinv = x;
                    break;
                }
            images[list[k].second][slot] = mod(images[list[k].second][slot] + q * qinv, n);
        }
    }
    for (auto& img : images)
        pres.generators.push_back(pres.group.from_coords(img));
    return pres;
}

Presentation present_direct_sum(std::initializer_list<int> factors)
{
    return present_direct_sum(std::span<const int>(factors.begin(), factors.size()));
}

ElementId Presentation::combine(std::span<const long long> coefficients) const
{
    if (coefficients.size() != generators.size())
        throw Error(Errc::invalid_argument, "coefficient count does not match the number of generators");
    ElementId r = 0;
    for (std::size_t i = 0; i < generators.size(); ++i)
        r = group.add(r, group.multiple(generators[i], coefficients[i]));
    return r;
}

ElementId Presentation::combine(std::initializer_list<long long> coefficients) const
{
    return combine(std::span<const long long>(coefficients.begin(), coefficients.size()));
}

FiniteAbelianGroup make_group(std::span<const int> factors)
{
    return present_direct_sum(factors).group;
}

FiniteAbelianGroup make_group(std::initializer_list<int> factors)
{
    return make_group(std::span<const int>(factors.begin(), factors.size()));
}

FiniteAbelianGroup parse_group_spec(std::string_view spec)
{
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < spec.size() && spec[pos] == ' ')
        ++pos;
    if (pos == spec.size())
        return FiniteAbelianGroup();
    while (pos <= spec.size()) {
        while (pos < spec.size() && spec[pos] == ' ')
            ++pos;
        int value = 0;
        auto [end, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), value);
        if (ec != std::errc())
            throw Error(Errc::parse_error, "expected integer at position " + std::to_string(pos) + " in group spec '"
                                               + std::string(spec) + "'");
        factors.push_back(value);
        pos = static_cast<std::size_t>(end - spec.data());
        while (pos < spec.size() && spec[pos] == ' ')
            ++pos;
        if (pos == spec.size())
            break;
        if (spec[pos] != ',')
            throw Error(Errc::parse_error, "expected ',' at position " + std::to_string(pos) + " in group spec '"
                                               + std::string(spec) + "'");
        ++pos;
    }
    return make_group(factors);
}

GroupElement add(const FiniteAbelianGroup& G, const GroupElement& g, const GroupElement& h)
{
    return G.element(G.add(G.id_of(g), G.id_of(h)));
}

GroupElement neg(const FiniteAbelianGroup& G, const GroupElement& g) { return G.element(G.neg(G.id_of(g))); }

GroupElement zero(const FiniteAbelianGroup& G) { return G.element(0); }

int element_order(const FiniteAbelianGroup& G, const GroupElement& g) { return G.order_of(G.id_of(g)); }

std::vector<GroupElement> elements(const FiniteAbelianGroup& G)
{
    std::vector<GroupElement> out;
    out.reserve(G.order());
    for (std::size_t id = 0; id < G.order(); ++id)
        out.push_back(G.element(static_cast<ElementId>(id)));
    return out;
}

int d_star(const FiniteAbelianGroup& G)
{
    int d = 1;
    for (int n : G.invariant_factors())
        d += n - 1;
    return d;
}

std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::size_t n)
{
    if (n == 0)
        throw Error(Errc::invalid_argument, "group order must be positive");
    // one list of prime-power factors per partition of each prime's exponent
    std::vector<std::vector<std::vector<int>>> per_prime;
    std::size_t rest = n;
    for (std::size_t p = 2; p * p <= rest || rest > 1; ++p) {
        if (p * p > rest)
            p = rest;
        int a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        if (a == 0)
            continue;
        std::vector<std::vector<int>> options;
        std::vector<int> part;
        std::function<void(int, int)> gen = [&](int left, int max_part) {
            if (left == 0) {
                std::vector<int> f;
                for (int e : part) {
                    int q = 1;
                    for (int i = 0; i < e; ++i)
                        q *= static_cast<int>(p);
                    f.push_back(q);
                }
                options.push_back(f);
                return;
            }
            for (int e = std::min(left, max_part); e >= 1; --e) {
                part.push_back(e);
                gen(left - e, e);
                part.pop_back();
            }
        };
        gen(a, a);
        per_prime.push_back(std::move(options));
    }
    std::vector<FiniteAbelianGroup> out;
    std::vector<int> factors;
    std::function<void(std::size_t)> combine = [&](std::size_t i) {
        if (i == per_prime.size()) {
            out.push_back(factors.empty() ? FiniteAbelianGroup() : make_group(factors));
            return;
        }
        for (const auto& f : per_prime[i]) {
            factors.insert(factors.end(), f.begin(), f.end());
            combine(i + 1);
            factors.resize(factors.size() - f.size());
        }
    };
    combine(0);
    std::sort(out.begin(), out.end(), [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        if (a.rank() != b.rank())
            return a.rank() > b.rank();
        return a.invariant_factors() < b.invariant_factors();
    });
    return out;
}

bool is_cyclic(const FiniteAbelianGroup& G) noexcept { return G.rank() <= 1; }

bool is_elementary_2_group(const FiniteAbelianGroup& G) noexcept { return G.rank() >= 1 && G.exponent() == 2; }

std::vector<std::vector<ElementId>> automorphism_tables(const FiniteAbelianGroup& G, std::size_t max_entries)
{
    // A homomorphism from C_{n1} + ... + C_{nr} is fixed by the images a_i of the
    // standard generators; it is bijective iff ord(a_i) = n_i and every a_i meets
    // the subgroup generated by the earlier images trivially.
    const int r = G.rank();
    const auto& n = G.invariant_factors();
    const std::size_t order = G.order();
    std::vector<std::vector<ElementId>> tables;
    std::vector<ElementId> images(static_cast<std::size_t>(r));
    std::vector<std::vector<char>> sub(static_cast<std::size_t>(r) + 1, std::vector<char>(order, 0));
    sub[0][0] = 1;
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            if ((tables.size() + 1) * order > max_entries)
                throw GuardError("automorphism-table-entries", "--max-automorphisms",
                                 "automorphism group of " + G.name() + " too large to tabulate");
            std::vector<ElementId> t(order);
            for (std::size_t x = 0; x < order; ++x) {
                ElementId y = 0;
                for (int k = 0; k < r; ++k)
                    y = G.add(y, G.multiple(images[static_cast<std::size_t>(k)], G.coordinate(static_cast<ElementId>(x), k)));
                t[x] = y;
            }
            tables.push_back(std::move(t));
            return;
        }
        const auto& H = sub[static_cast<std::size_t>(i)];
        auto& next = sub[static_cast<std::size_t>(i) + 1];
        for (std::size_t a = 0; a < order; ++a) {
            if (G.order_of(static_cast<ElementId>(a)) != n[static_cast<std::size_t>(i)])
                continue;
            bool trivial = true;
            ElementId m = static_cast<ElementId>(a);
            for (int k = 1; k < n[static_cast<std::size_t>(i)]; ++k, m = G.add(m, static_cast<ElementId>(a)))
                if (H[m]) {
                    trivial = false;
                    break;
                }
            if (!trivial)
                continue;
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t h = 0; h < order; ++h) {
                if (!H[h])
                    continue;
                ElementId y = static_cast<ElementId>(h);
                for (int k = 0; k < n[static_cast<std::size_t>(i)]; ++k, y = G.add(y, static_cast<ElementId>(a)))
                    next[y] = 1;
            }
            images[static_cast<std::size_t>(i)] = static_cast<ElementId>(a);
            rec(i + 1);
        }
    };
    rec(0);
    return tables;
}

std::string render(const FiniteAbelianGroup& G, ElementId id)
{
    std::string s = "(";
    for (int i = 0; i < G.rank(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(G.coordinate(id, i));
    }
    return s + ")";
}

bool ElementSet::empty() const noexcept
{
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ElementSet::size() const noexcept
{
    std::size_t n = 0;
    for (auto w : bits_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

void ElementSet::absorb(const FiniteAbelianGroup& G, ElementId x)
{
    std::uint64_t small[8];
    std::vector<std::uint64_t> large;
    const std::uint64_t* old = bits_.data();
    if (bits_.size() <= 8) {
        std::copy(bits_.begin(), bits_.end(), small);
        old = small;
    } else {
        large = bits_;
        old = large.data();
    }
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = old[w];
        while (word != 0) {
            const int b = std::countr_zero(word);
            word &= word - 1;
            insert(G.add(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)), x));
        }
    }
    insert(x);
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept
{
    for (std::size_t w = 0; w < bits_.size() && w < other.bits_.size(); ++w)
        bits_[w] |= other.bits_[w];
    return *this;
}

std::vector<ElementId> ElementSet::to_vector() const
{
    std::vector<ElementId> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word != 0) {
            const int b = std::countr_zero(word);
            word &= word - 1;
            out.push_back(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(b)));
        }
    }
    return out;
}

}  // namespace zsl
