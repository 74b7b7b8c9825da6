#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domex/domination.hpp"

namespace domex::claims {

enum class Status { pass, fail, skipped_long_running };
std::string_view status_name(Status s);

// quick is a subset of paper; long is paper with the long-running claims enabled.
enum class Suite { quick, paper, long_running };
std::optional<Suite> parse_suite(std::string_view name);

// Source of optimal-set collections. Every claim that needs mu-sets asks this, so a
// deliberately broken solver can be injected.
using SetOracle = std::function<ParamResult(const Graph&, Param)>;

struct Context {
    SetOracle sets = [](const Graph& g, Param p) { return min_sets(g, p); };
    bool run_long = false;
};

struct Outcome {
    bool pass = false;
    std::string expected;
    std::string computed;
};

struct Claim {
    std::string id;
    std::string anchor;  // what the claim is about
    int criterion = 0;   // acceptance criterion number, 0 for supplementary claims
    bool quick = false;
    bool long_running = false;
    std::function<Outcome(const Context&)> check;
};

struct ClaimReport {
    std::string id;
    std::string anchor;
    int criterion = 0;
    Status status = Status::fail;
    std::string expected;
    std::string computed;
    double runtime_ms = 0.0;
};

// Every registered claim, in report order.
const std::vector<Claim>& registry();
std::vector<const Claim*> suite_claims(Suite s);

// Exceptions thrown by a check become fail entries.
ClaimReport run_claim(const Claim& c, const Context& ctx);
// Claims run as a parallel map; the result order is the registry order.
std::vector<ClaimReport> run_suite(Suite s, Context ctx);

bool all_passed(const std::vector<ClaimReport>& reports);

}  // namespace domex::claims
