#include "doctest.h"

#include <set>

#include "domex/claims.hpp"

using namespace domex;
using namespace domex::claims;

TEST_CASE("registry shape") {
    const auto& all = registry();
    std::set<std::string> ids;
    std::set<int> criteria;
    for (const Claim& c : all) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.anchor.empty());
        if (c.criterion > 0) CHECK(criteria.insert(c.criterion).second);
    }
    CHECK(criteria.size() == 15);
    CHECK(*criteria.begin() == 1);
    CHECK(*criteria.rbegin() == 15);
    CHECK(suite_claims(Suite::paper).size() == all.size());
    CHECK(suite_claims(Suite::long_running).size() == all.size());
    CHECK(suite_claims(Suite::quick).size() < all.size());
    for (const Claim* c : suite_claims(Suite::quick)) CHECK(c->quick);
    CHECK(parse_suite("quick") == Suite::quick);
    CHECK(parse_suite("long") == Suite::long_running);
    CHECK_FALSE(parse_suite("fast").has_value());
    CHECK(status_name(Status::skipped_long_running) == "skipped-long-running");
}

TEST_CASE("quick suite passes with the real solver") {
    const auto reports = run_suite(Suite::quick, Context{});
    CHECK(all_passed(reports));
    for (const ClaimReport& r : reports) {
        INFO(r.id << ": expected " << r.expected << ", computed " << r.computed);
        CHECK(r.status == Status::pass);
    }
}

TEST_CASE("a broken set oracle is caught") {
    Context broken;
    broken.sets = [](const Graph& g, Param p) {
        ParamResult r = min_sets(g, p);
        r.sets.resize(1);
        return r;
    };
    const auto reports = run_suite(Suite::quick, broken);
    std::size_t failures = 0;
    for (const ClaimReport& r : reports)
        if (r.status == Status::fail) ++failures;
    CHECK(failures >= 1);
    CHECK_FALSE(all_passed(reports));
}

TEST_CASE("long claims are skipped unless enabled") {
    for (const Claim& c : registry()) {
        if (!c.long_running) continue;
        const ClaimReport r = run_claim(c, Context{});
        CHECK(r.status == Status::skipped_long_running);
        CHECK(r.criterion == c.criterion);
    }
}

TEST_CASE("exceptions become failures") {
    Claim c{"throws", "always throws", 0, true, false, [](const Context&) -> Outcome { throw std::runtime_error("boom"); }};
    const ClaimReport r = run_claim(c, Context{});
    CHECK(r.status == Status::fail);
    CHECK(r.computed.find("boom") != std::string::npos);
}

TEST_CASE("suite results are deterministic") {
    const auto a = run_suite(Suite::quick, Context{});
    const auto b = run_suite(Suite::quick, Context{});
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].id == b[k].id);
        CHECK(a[k].status == b[k].status);
        CHECK(a[k].expected == b[k].expected);
        CHECK(a[k].computed == b[k].computed);
    }
}
