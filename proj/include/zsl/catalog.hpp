#pragma once

#include "zsl/sequence.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace zsl::catalog {

/// C_2^5 with basis e_1, ..., e_5 (e_i is the unit vector at coordinate i-1)
/// and e_0 = e_1 + ... + e_5.
class C25 {
public:
    C25();
    const FiniteAbelianGroup& group() const noexcept { return G_; }

    /// e_i for i in [0, 5].
    ElementId e(int i) const;
    /// e_I = sum of e_i over i in I, with I a subset of [1, 5].
    ElementId e(std::initializer_list<int> I) const;
    ElementId e(const std::vector<int>& I) const;

    /// U_I = e_I * prod_{i in I} e_i
    Sequence U(const std::vector<int>& I) const;
    /// V_I = e_I * prod_{i in [0,5] \ I} e_i
    Sequence V(const std::vector<int>& I) const;
    /// U = U_{[1,5]} = e_0 e_1 ... e_5
    Sequence U() const;

    Sequence V1() const;   // e1 e2 e3 e4 e_{345} e_{125}
    Sequence V2() const;   // e1 e_{12} e3 e4 e5 e_{[2,5]}
    Sequence U1p() const;  // e_{[1,4]} e1 e2 e3 e4
    Sequence U2p() const;  // e1 e2 e_{13} e_{24} e_{34}
    Sequence U3p() const;  // e_{12} e_{13} e_{24} e3 e4
    Sequence U4p() const;  // e_{12} e_{13} e_{24} e_{34}

    Sequence A1() const;   // U^2 U_{[1,2]}
    Sequence A2() const;   // U^2 U_{[1,4]}
    Sequence A3() const;   // U^3 U_{[1,2]}
    Sequence A4() const;   // U^3 V_{[1,2]}

    /// e0 e_{12} e_{34} e5
    Sequence W_pair() const;
    /// e1 e2 e3 e4 e_{125} e_{345}
    Sequence W_triple() const;

    /// A pair product with L = [2,5], found by a pair sweep.
    Sequence interval_2_5() const;
    /// A pair product with L = [2,4], found by a pair sweep.
    Sequence interval_2_4() const;

    /// Sequence of 2-element atoms: prod_{i=1}^{s} e_i^2.
    Sequence squares(int s) const;

private:
    FiniteAbelianGroup G_;
};

/// C_6 with generator g = (1).
struct C6 {
    FiniteAbelianGroup G;
    ElementId g = 1;
    C6();
    ElementId mul(int k) const;  // k*g
    /// prod (k_i g)^{m_i}
    Sequence seq(std::initializer_list<std::pair<int, int>> terms) const;
};

/// (2g) g^{v+4} (-g)^{w+2}
Sequence c6_lemma34(int v, int w);
/// (2g)^2 g^{v+8} (-g)^{w+4}
Sequence c6_amp_square(int v, int w);
/// (2g)(4g) g^v (-g)^w
Sequence c6_amp_mixed(int v, int w);

/// How one amp4_c6 case at (y, k) is realized over C_6.
struct AmpRealization {
    std::string which;
    int y = 0;
    int k = 0;
    std::string form;  // "square" or "mixed"
    int v = 0;
    int w = 0;
    Sequence sequence;
};
/// Realizations over C_6 for every case at the given k (y = 0, plus y = 1
/// where the mixed form provides it).
std::vector<AmpRealization> amp4_c6_realizations(int k);

/// C_3^3, basis e1, e2, e3: U = e1^2 e2^2 e3^2 (e1 + e2 + e3).
Sequence c333_U();
/// C_4 + C_4, basis e1, e2: U = e2^3 e1 (e1 + e2) (e1 + 2e2)^2.
Sequence c44_U();

/// V = e2^{n2-1} e1^{n1-3} (e1 + m e2)^2 (e1 + e2) in C_{n1} + C_{n2},
/// m = n2 / 2; basis images come from the direct-sum presentation.
struct Thm114Witness {
    FiniteAbelianGroup group;
    ElementId e1 = 0;
    ElementId e2 = 0;
    int n1 = 0;
    int n2 = 0;
    Sequence V;
};
Thm114Witness thm114_witness(int n1, int n2);
/// V = e2^{n2-1} e1 (e1 + e2)(e1 - 2e2)(e1 + 2e2) in C_4 + C_{n2}.
Thm114Witness thm114_n1eq4_witness(int n2);

struct Entry {
    std::string label;
    std::string description;
    Sequence sequence;
};
/// Every named sequence, keyed by label (e.g. "C2^5:V1", "C6:W").
const std::vector<Entry>& entries();
const Entry& lookup(const std::string& label);

}  // namespace zsl::catalog
