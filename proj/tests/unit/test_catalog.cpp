#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace qtwist;

TEST_CASE("Every catalog case is confirmed")
{
    QCharProvider provider;
    REQUIRE(catalog().size() >= 20);
    for (const auto& entry : catalog()) {
        const auto rep = verify_report(entry.name, provider);
        INFO(entry.name);
        for (const auto& c : rep.clauses) {
            INFO(c.clause << ": " << verdict_name(c.verdict) << " " << c.detail);
            CHECK(c.verdict == Verdict::confirmed);
        }
        CHECK(rep.overall() == Verdict::confirmed);
    }
}

TEST_CASE("Catalog lookup")
{
    QCharProvider provider;
    CHECK_THROWS_AS(verify_report("no-such-case", provider), math_error);
    std::set<std::string> names;
    for (const auto& e : catalog()) CHECK(names.insert(e.name).second);
}

TEST_CASE("Verdict aggregation")
{
    CaseReport r{"x", "", {}, {}};
    CHECK(r.overall() == Verdict::inconclusive);
    r.clauses.push_back({"a", Verdict::confirmed, "", ""});
    CHECK(r.overall() == Verdict::confirmed);
    r.clauses.push_back({"b", Verdict::inconclusive, "", ""});
    CHECK(r.overall() == Verdict::inconclusive);
    r.clauses.push_back({"c", Verdict::refuted, "", ""});
    CHECK(r.overall() == Verdict::refuted);
    CHECK(verdict_name(Verdict::refuted) == "REFUTED-at-truncation");
}

TEST_CASE("A wrong target is refuted, not hidden")
{
    QCharProvider provider;
    detail::LimitCase lc{"A1", WeylWord{1}, 1, {}, detail::sweep(4, 10)};
    lc.value = [](const CartanDatum& g, std::int64_t N) { return targets::e_geometric(g, WeylWord{1}, N, 1, 1) + targets::e_geometric(g, WeylWord{1}, N, 1, 1); };
    const auto rep = detail::run_limit_case("bogus", "", lc, provider);
    CHECK(rep.overall() == Verdict::refuted);
}

TEST_CASE("Minimal affinization a-part: the string of A_{1,.} has at most l factors")
{
    QCharProvider provider;
    for (std::int64_t l : {1, 2}) {
        INFO("l=" << l);
        const WeylWord w{2, 1};
        for (std::int64_t top : {l - 1, l}) {
            detail::LimitCase lc{"A2", w, 1, targets::minaff_m(l), detail::sweep(6, 14)};
            lc.a = [w, l, top](const CartanDatum& g, std::int64_t N) { return targets::minaff_s2s1_a(g, w, N, l, top); };
            const auto rep = detail::run_limit_case("minaff", "", lc, provider);
            CHECK(rep.overall() == (top == l - 1 ? Verdict::confirmed : Verdict::refuted));
        }
    }
}
