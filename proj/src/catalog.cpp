#include "zsl/catalog.hpp"

#include "zsl/error.hpp"

#include <algorithm>

namespace zsl::catalog {

C25::C25() : G_(make_group({2, 2, 2, 2, 2})) {}

ElementId C25::e(int i) const
{
    if (i < 0 || i > 5)
        throw Error(Errc::invalid_argument, "basis index out of range: " + std::to_string(i));
    if (i == 0)
        return e({1, 2, 3, 4, 5});
    std::vector<long long> c(5, 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    return G_.from_coords(c);
}

ElementId C25::e(std::initializer_list<int> I) const { return e(std::vector<int>(I)); }

ElementId C25::e(const std::vector<int>& I) const
{
    std::vector<long long> c(5, 0);
    for (int i : I) {
        if (i < 1 || i > 5)
            throw Error(Errc::invalid_argument, "index set must lie in [1,5]");
        c[static_cast<std::size_t>(i - 1)] += 1;
    }
    return G_.from_coords(c);
}

Sequence C25::U(const std::vector<int>& I) const
{
    std::vector<ElementId> ids{e(I)};
    for (int i : I)
        ids.push_back(e(i));
    return Sequence::from_ids(G_, ids);
}

Sequence C25::V(const std::vector<int>& I) const
{
    std::vector<ElementId> ids{e(I)};
    for (int i = 0; i <= 5; ++i)
        if (std::find(I.begin(), I.end(), i) == I.end())
            ids.push_back(e(i));
    return Sequence::from_ids(G_, ids);
}

Sequence C25::U() const { return U({1, 2, 3, 4, 5}); }

Sequence C25::V1() const
{
    return Sequence::from_ids(G_, {e(1), e(2), e(3), e(4), e({3, 4, 5}), e({1, 2, 5})});
}

Sequence C25::V2() const
{
    return Sequence::from_ids(G_, {e(1), e({1, 2}), e(3), e(4), e(5), e({2, 3, 4, 5})});
}

Sequence C25::U1p() const { return Sequence::from_ids(G_, {e({1, 2, 3, 4}), e(1), e(2), e(3), e(4)}); }

Sequence C25::U2p() const { return Sequence::from_ids(G_, {e(1), e(2), e({1, 3}), e({2, 4}), e({3, 4})}); }

Sequence C25::U3p() const
{
    // the displayed e_{13} e_{24} e_{34} e3 e4 sums to e_{[1,4]}; e_{34} is replaced by e_{12}
    return Sequence::from_ids(G_, {e({1, 3}), e({2, 4}), e({1, 2}), e(3), e(4)});
}

Sequence C25::U4p() const { return Sequence::from_ids(G_, {e({1, 2}), e({1, 3}), e({2, 4}), e({3, 4})}); }

Sequence C25::A1() const { return U().pow(2) * U({1, 2}); }
Sequence C25::A2() const { return U().pow(2) * U({1, 2, 3, 4}); }
Sequence C25::A3() const { return U().pow(3) * U({1, 2}); }
Sequence C25::A4() const { return U().pow(3) * V({1, 2}); }

Sequence C25::W_pair() const { return Sequence::from_ids(G_, {e(0), e({1, 2}), e({3, 4}), e(5)}); }

Sequence C25::W_triple() const
{
    return Sequence::from_ids(G_, {e(1), e(2), e(3), e(4), e({1, 2, 5}), e({3, 4, 5})});
}

Sequence C25::interval_2_5() const
{
    const Sequence second =
        Sequence::from_ids(G_, {e(5), e(4), e(3), e({2, 5}), e({1, 3, 4}), e({1, 2})});
    return U() * second;
}

Sequence C25::interval_2_4() const
{
    const Sequence first = Sequence::from_ids(G_, {e(4), e(3), e(2), e(1), e({1, 2, 3, 4})});
    const Sequence second = Sequence::from_ids(G_, {e(4), e(3), e(2), e({1, 4}), e({1, 2, 3})});
    return first * second;
}

Sequence C25::squares(int s) const
{
    Sequence out(G_);
    for (int i = 1; i <= s; ++i)
        out *= Sequence::power_of(G_, e(i), 2);
    return out;
}

C6::C6() : G(make_group({6})) {}

ElementId C6::mul(int k) const { return G.multiple(g, k); }

Sequence C6::seq(std::initializer_list<std::pair<int, int>> terms) const
{
    std::vector<std::pair<ElementId, int>> pairs;
    for (const auto& [k, m] : terms)
        pairs.emplace_back(mul(k), m);
    return Sequence::from_counts(G, pairs);
}

namespace {

void require_nonnegative(int a, const char* what)
{
    if (a < 0)
        throw Error(Errc::invalid_argument, std::string("negative exponent in ") + what);
}

}  // namespace

Sequence c6_lemma34(int v, int w)
{
    require_nonnegative(v + 4, "c6_lemma34");
    require_nonnegative(w + 2, "c6_lemma34");
    return C6().seq({{2, 1}, {1, v + 4}, {-1, w + 2}});
}

Sequence c6_amp_square(int v, int w)
{
    require_nonnegative(v + 8, "c6_amp_square");
    require_nonnegative(w + 4, "c6_amp_square");
    return C6().seq({{2, 2}, {1, v + 8}, {-1, w + 4}});
}

Sequence c6_amp_mixed(int v, int w)
{
    require_nonnegative(v, "c6_amp_mixed");
    require_nonnegative(w, "c6_amp_mixed");
    return C6().seq({{2, 1}, {4, 1}, {1, v}, {-1, w}});
}

std::vector<AmpRealization> amp4_c6_realizations(int k)
{
    if (k < 0)
        throw Error(Errc::invalid_argument, "k must be non-negative");
    std::vector<AmpRealization> out;
    auto square = [&](const std::string& which, int v, int w) {
        out.push_back({which, 0, k, "square", v, w, c6_amp_square(v, w)});
    };
    auto mixed = [&](const std::string& which, int r, int y) {
        const int v = r + 6 * (k + 1);
        out.push_back({which, y, k, "mixed", v, v, c6_amp_mixed(v, v)});
    };
    // v = 4 + 6(k-1) is read as the exponent v + 8 = 6k + 6, which stays
    // valid at k = 0
    square("1a", 4 + 6 * (k - 1), 6 + 6 * k);
    mixed("1b", 2, 0);
    mixed("1b", 3, 1);
    square("1c", 4 + 6 * k, 6 + 6 * k);
    mixed("2a", 0, 0);
    mixed("2a", 1, 1);
    square("2b", 2 + 6 * k, 4 + 6 * k);
    square("2c", 2 + 6 * k, 10 + 6 * k);
    square("3a", 6 * k, 2 + 6 * k);
    square("3b", 6 * k, 8 + 6 * k);
    mixed("3c", 4, 0);
    mixed("3c", 5, 1);
    return out;
}

Sequence c333_U()
{
    const auto G = make_group({3, 3, 3});
    const ElementId e1 = G.from_coords(std::vector<long long>{1, 0, 0});
    const ElementId e2 = G.from_coords(std::vector<long long>{0, 1, 0});
    const ElementId e3 = G.from_coords(std::vector<long long>{0, 0, 1});
    const ElementId e0 = G.from_coords(std::vector<long long>{1, 1, 1});
    return Sequence::from_counts(G, {{e1, 2}, {e2, 2}, {e3, 2}, {e0, 1}});
}

Sequence c44_U()
{
    const auto G = make_group({4, 4});
    auto el = [&](long long a, long long b) { return G.from_coords(std::vector<long long>{a, b}); };
    return Sequence::from_counts(G, {{el(0, 1), 3}, {el(1, 0), 1}, {el(1, 1), 1}, {el(1, 2), 2}});
}

Thm114Witness thm114_witness(int n1, int n2)
{
    if (n1 < 3 || n2 < 2 || n2 % 2 != 0)
        throw Error(Errc::invalid_argument, "need n1 >= 3 and even n2");
    const Presentation P = present_direct_sum({n1, n2});
    Thm114Witness w;
    w.group = P.group;
    w.n1 = n1;
    w.n2 = n2;
    w.e1 = P.generators[0];
    w.e2 = P.generators[1];
    const int m = n2 / 2;
    w.V = Sequence::from_counts(P.group, {{w.e2, n2 - 1},
                                          {w.e1, n1 - 3},
                                          {P.combine({1, m}), 2},
                                          {P.combine({1, 1}), 1}});
    return w;
}

Thm114Witness thm114_n1eq4_witness(int n2)
{
    if (n2 < 4 || n2 % 4 != 0)
        throw Error(Errc::invalid_argument, "need n2 divisible by 4");
    const Presentation P = present_direct_sum({4, n2});
    Thm114Witness w;
    w.group = P.group;
    w.n1 = 4;
    w.n2 = n2;
    w.e1 = P.generators[0];
    w.e2 = P.generators[1];
    w.V = Sequence::from_counts(P.group, {{w.e2, n2 - 1},
                                          {w.e1, 1},
                                          {P.combine({1, 1}), 1},
                                          {P.combine({1, -2}), 1},
                                          {P.combine({1, 2}), 1}});
    return w;
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> all = [] {
        const C25 c;
        const C6 z;
        std::vector<Entry> v;
        v.push_back({"C2^5:U", "U = U_[1,5] = e0 e1 ... e5", c.U()});
        v.push_back({"C2^5:U_[1,2]", "e_{12} e1 e2", c.U({1, 2})});
        v.push_back({"C2^5:U_[1,3]", "e_{123} e1 e2 e3", c.U({1, 2, 3})});
        v.push_back({"C2^5:U_[1,4]", "e_{1234} e1 e2 e3 e4", c.U({1, 2, 3, 4})});
        v.push_back({"C2^5:V_[1,2]", "e_{12} e0 e3 e4 e5", c.V({1, 2})});
        v.push_back({"C2^5:V1", "e1 e2 e3 e4 e_{345} e_{125}", c.V1()});
        v.push_back({"C2^5:V2", "e1 e_{12} e3 e4 e5 e_{[2,5]}", c.V2()});
        v.push_back({"C2^5:U1'", "e_{[1,4]} e1 e2 e3 e4", c.U1p()});
        v.push_back({"C2^5:U2'", "e1 e2 e_{13} e_{24} e_{34}", c.U2p()});
        v.push_back({"C2^5:U3'", "e_{12} e_{13} e_{24} e3 e4", c.U3p()});
        v.push_back({"C2^5:U4'", "e_{12} e_{13} e_{24} e_{34}", c.U4p()});
        v.push_back({"C2^5:A1", "U^2 U_[1,2]", c.A1()});
        v.push_back({"C2^5:A2", "U^2 U_[1,4]", c.A2()});
        v.push_back({"C2^5:A3", "U^3 U_[1,2]", c.A3()});
        v.push_back({"C2^5:A4", "U^3 V_[1,2]", c.A4()});
        v.push_back({"C2^5:W(realC25_2)", "e0 e_{12} e_{34} e5", c.W_pair()});
        v.push_back({"C2^5:W(realC25_3)", "e1 e2 e3 e4 e_{125} e_{345}", c.W_triple()});
        v.push_back({"C2^5:[2,5]", "pair product with L = [2,5]", c.interval_2_5()});
        v.push_back({"C2^5:[2,4]", "pair product with L = [2,4]", c.interval_2_4()});
        v.push_back({"C6:W", "g^6", z.seq({{1, 6}})});
        v.push_back({"C6:V", "g^4 (2g)", z.seq({{1, 4}, {2, 1}})});
        v.push_back({"C3^3:U", "e1^2 e2^2 e3^2 (e1+e2+e3)", c333_U()});
        v.push_back({"C4+C4:U", "e2^3 e1 (e1+e2) (e1+2e2)^2", c44_U()});
        v.push_back({"C6+C8:V", "e2^7 e1^3 (e1+4e2)^2 (e1+e2)", thm114_witness(6, 8).V});
        v.push_back({"C4+C8:V", "e2^7 e1 (e1+e2) (e1-2e2) (e1+2e2)", thm114_n1eq4_witness(8).V});
        return v;
    }();
    return all;
}

const Entry& lookup(const std::string& label)
{
    for (const auto& e : entries())
        if (e.label == label)
            return e;
    throw Error(Errc::not_found, "no catalog entry named " + label);
}

}  // namespace zsl::catalog
