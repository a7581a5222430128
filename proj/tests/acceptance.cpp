// One line per acceptance criterion; nonzero exit when any fails.

#include "properties.hpp"

#include "zsl/invariants.hpp"
#include "zsl/verify.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome checks(const std::vector<std::string>& ids)
{
    Outcome o;
    for (const auto& id : ids) {
        const auto r = zsl::run_check(id, zsl::CheckOptions{0, {}});
        if (r.status != zsl::CheckStatus::pass) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + id + " " + zsl::to_string(r.status) + ": " + r.reason;
        } else {
            o.detail += (o.detail.empty() ? "" : ", ") + id + " pass";
        }
    }
    return o;
}

Outcome property(const std::vector<std::pair<std::string, std::function<std::string()>>>& suites)
{
    Outcome o;
    for (const auto& [name, run] : suites) {
        const auto failure = run();
        if (!failure.empty()) {
            o.ok = false;
            o.detail += name + ": " + failure + "; ";
        }
    }
    if (o.ok)
        o.detail = "all suites pass";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Davenport constants equal D*", [] { return checks({"davenport-constants"}); }},
        {"pair sweep over C6 (Lemma 3.1)", [] { return checks({"lemma-3.1"}); }},
        {"explicit C2^5 sets (Lemma 3.2)", [] { return checks({"lemma-3.2-examples"}); }},
        {"five sets over C6 and C2^5 (Lemma 3.4)", [] { return checks({"lemma-3.4"}); }},
        {"{2,n-2,n-1} and {2,r-1,r} (Lemmas 4.2, 4.3)", [] { return checks({"lemma-4.2", "lemma-4.3"}); }},
        {"C2+C2n atoms and pair families (Lemma 5.2, Proposition 5.3)",
         [] { return checks({"lemma-5.2", "prop-5.3-n2", "prop-5.3-n3"}); }},
        {"L(U^3), L(U^6) over C3^3 (Lemma 5.4)", [] { return checks({"lemma-5.4"}); }},
        {"no 3 in L(U(-U)) over C2^3+C4 (Lemma 5.6)", [] { return checks({"lemma-5.6"}); }},
        {"Corollary 1.2 witnesses", [] { return checks({"cor-1.2-witnesses"}); }},
        {"property suites",
         [] {
             return property({
                 {"atoms", [] { return props::atom_oracle(9); }},
                 {"lengths C6", [] { return props::length_oracle(zsl::make_group({6}), 12); }},
                 {"lengths C2+C4", [] { return props::length_oracle(zsl::make_group({2, 4}), 12); }},
                 {"g-norm", [] { return props::gnorm_sandwich(6, 500, 20261015); }},
                 {"daleth chain", [] { return props::daleth_chain(6, 12); }},
             });
         }},
        {"Theorem A family over C3 and C2^2, |B| <= 18", [] { return checks({"thm-a-bounded"}); }},
        {"daleth(C2+C6) = daleth(C2^3+C4) = 6 and the order <= 16 sweep (Lemma 5.1)",
         [] {
             Outcome o = checks({"lemma-5.1", "lemma-5.1-daleth"});
             const int a = zsl::daleth(zsl::make_group({2, 6}));
             const int b = zsl::daleth(zsl::make_group({2, 2, 2, 4}));
             o.detail += "; daleth(C2+C6) = " + std::to_string(a) + ", daleth(C2^3+C4) = " + std::to_string(b);
             o.ok = o.ok && a == 6 && b == 6;
             return o;
         }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.ok ? 0 : 1;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
                  << o.detail << "]" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
