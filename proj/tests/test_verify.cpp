#include "zsl/error.hpp"
#include "zsl/verify.hpp"

#include <doctest.h>

#include <set>

using namespace zsl;

namespace {

bool reason_has(const CheckReport& r, const std::string& s) { return r.reason.find(s) != std::string::npos; }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("registry covers every check id")
{
    const std::set<std::string> want{
        "davenport-constants", "lemma-3.1", "lemma-3.2-examples", "lemma-3.2-intervals", "prop-3.3",
        "lemma-3.4", "prop-3.5", "prop-3.6", "prop-amp4-c6", "realc25-1", "realc25-2", "realc25-3",
        "lemma-7.1", "lemma-7.2", "lemma-7.3", "lemma-4.1", "lemma-4.2", "lemma-4.3", "lemma-4.3-r6",
        "lemma-5.1", "lemma-5.1-daleth", "lemma-5.2", "prop-5.3-n2", "prop-5.3-n3", "lemma-5.4",
        "lemma-5.6", "cor-1.2-witnesses", "thm-1.1.4-witness", "thm-1.1.4-n1eq4-witness",
        "prop-2.2-crosschecks", "thm-a-bounded"};
    std::set<std::string> got;
    for (const auto& c : list_checks()) {
        got.insert(c.id);
        CHECK_FALSE(c.reference.empty());
        CHECK_FALSE(c.summary.empty());
    }
    CHECK(got == want);
    CHECK(check_info("lemma-3.1").reference == "Lemma 3.1");
}

TEST_CASE("default ids leave out the long check")
{
    const auto ids = default_check_ids();
    CHECK(std::find(ids.begin(), ids.end(), "lemma-4.3-r6") == ids.end());
    CHECK(ids.size() + 1 == list_checks().size());
    const auto all = default_check_ids(true);
    CHECK(all.back() == "lemma-4.3-r6");
    CHECK(check_info("lemma-4.3-r6").long_running);
}

TEST_CASE("unknown id")
{
    try {
        run_check("lemma-9.9");
        FAIL("expected not_found");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_found);
    }
}

TEST_CASE("reports are deterministic")
{
    CheckOptions one;
    CheckOptions two;
    two.workers = 3;
    const auto a = run_check("lemma-3.1", one);
    const auto b = run_check("lemma-3.1", two);
    CHECK(a.status == CheckStatus::pass);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
}

TEST_CASE("lemma-7.1 fails on a length set outside the family")
{
    const auto r = run_check("lemma-7.1");
    CHECK(r.status == CheckStatus::fail);
    CHECK(reason_has(r, "(1)^8 (3)^2 (4)^4"));
    CHECK(reason_has(r, "{3,4,5}"));
}

TEST_CASE("lemma-7.2 fails on a difference 4")
{
    const auto r = run_check("lemma-7.2");
    CHECK(r.status == CheckStatus::fail);
    CHECK(reason_has(r, "{4,8}"));
}

TEST_CASE("lemma-7.3 fails on the reduction step")
{
    const auto r = run_check("lemma-7.3");
    CHECK(r.status == CheckStatus::fail);
    CHECK(reason_has(r, "(0)^2 (1)^6 (3) (5)^3"));
    CHECK(reason_has(r, "{4,6}"));
}

TEST_CASE("witness checks pass with a skipped sub-claim")
{
    const auto r = run_check("thm-1.1.4-witness");
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.mode == CheckMode::witness);
    const bool some_skipped =
        std::any_of(r.details.begin(), r.details.end(), [](const SubClaim& s) { return s.skipped; });
    CHECK(some_skipped);
    CHECK(run_check("thm-1.1.4-n1eq4-witness").status == CheckStatus::pass);
}

TEST_CASE("table and JSON rendering")
{
    const auto reports = run_checks({"lemma-5.4", "lemma-7.2"});
    const auto table = render_table(reports);
    CHECK(table.find("lemma-5.4") != std::string::npos);
    CHECK(table.find("fail") != std::string::npos);
    const auto j = to_json(reports, false);
    REQUIRE(j.is_array());
    CHECK(j[0]["status"] == "pass");
    CHECK(j[1]["status"] == "fail");
    CHECK_FALSE(j[0].contains("runtime_seconds"));
}

}
