#pragma once

#include "zsl/lengths.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace zsl {

bool is_interval(const LengthSet& L);

struct AmpDescriptor {
    int d = 1;
    std::vector<int> period;  // sorted, contains 0 and d
    int ell = 0;              // largest l with min L + l*d in L
    int offset = 0;           // min L

    friend bool operator==(const AmpDescriptor&, const AmpDescriptor&) = default;
};

/// L = (min L + period + dZ) ∩ [min L, max L]
std::optional<AmpDescriptor> is_amp(const LengthSet& L, int d, const std::vector<int>& period);

constexpr int kAmpMaxDifference = 8;
constexpr int kAmpMaxSpan = 64;

/// Every (d, period) with d in [1, max(1, min(8, max L - min L))] for which L
/// is an AMP, ordered by d and then by period.
std::vector<AmpDescriptor> amp_decompositions(const LengthSet& L);

struct AampDescriptor {
    AmpDescriptor core;  // describes L* (offset 0)
    int M = 0;
    int y = 0;
    std::vector<int> initial;  // L'
    std::vector<int> central;  // L*
    std::vector<int> final;    // L''
};

/// First split L = y + (L' ∪ L* ∪ L'') found with y ascending over L and
/// max L* descending.
std::optional<AampDescriptor> is_aamp(const LengthSet& L, int d, const std::vector<int>& period, int M);

nlohmann::json to_json(const AmpDescriptor& a);
nlohmann::json to_json(const AampDescriptor& a);

/// Closed-form families. Parameters:
///   theorem_a: y, k      -> y + 2k + [0, k]
///   lemma72:   y, k      -> y + 2k + 3*[0, k]
///   lemma54:   k         -> 3k + 2*[0, 2k]
///   prop53:    n         -> both families of sets containing {2, 2n+1}
///   amp4_c6:   case, y, k (case "1a".."3c") -> y + 2k + base + 4*[0, k]
std::vector<LengthSet> family(const std::string& name, const std::vector<std::string>& params);

LengthSet family_theorem_a(int y, int k);
LengthSet family_lemma72(int y, int k);
LengthSet family_lemma54(int k);
std::vector<LengthSet> family_prop53(int n);
LengthSet family_amp4_c6(const std::string& which, int y, int k);
const std::vector<std::string>& amp4_c6_cases();
/// The period of an amp4_c6 case: {0,1,2,4}, {0,1,3,4} or {0,2,3,4}.
std::vector<int> amp4_c6_period(const std::string& which);

}  // namespace zsl
