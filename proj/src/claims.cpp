#include "domex/claims.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "domex/canon.hpp"
#include "domex/catalog.hpp"
#include "domex/construct.hpp"
#include "domex/excellence.hpp"
#include "domex/graph6.hpp"
#include "domex/trees.hpp"

namespace domex::claims {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_long_running: return "skipped-long-running";
    }
    return "fail";
}

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "quick") return Suite::quick;
    if (name == "paper") return Suite::paper;
    if (name == "long") return Suite::long_running;
    return std::nullopt;
}

namespace {

// Collects failed sub-checks; the first few are kept verbatim for the report.
class Checker {
public:
    explicit Checker(std::string expected) : expected_(std::move(expected)) {}

    void require(bool ok, const std::string& detail) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < kListed) failures_.push_back(detail);
        ++failed_;
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    Outcome finish() const {
        Outcome out;
        out.pass = failed_ == 0;
        out.expected = expected_;
        std::string computed;
        if (out.pass) {
            computed = std::to_string(checks_) + " checks hold";
        } else {
            computed = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed: ";
            for (std::size_t i = 0; i < failures_.size(); ++i) computed += (i ? "; " : "") + failures_[i];
            if (failed_ > failures_.size()) computed += "; ...";
        }
        for (const auto& n : notes_) computed += " [" + n + "]";
        out.computed = std::move(computed);
        return out;
    }

private:
    static constexpr std::size_t kListed = 6;
    std::string expected_;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
};

struct Named {
    std::string label;
    Graph graph;
};

Graph co_k(int n) { return edgeless(n); }

Graph join_all(std::vector<Graph> parts) {
    Graph g = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, parts[i]);
    return g;
}

Named K(int n) { return {"K" + std::to_string(n), complete(n)}; }
Named coK(int n) { return {n == 1 ? "K1" : "co-K" + std::to_string(n), co_k(n)}; }
Named KplusCoK(int p, int q) {
    const std::string rest = q == 1 ? "K1" : "co-K" + std::to_string(q);
    return {"K" + std::to_string(p) + "+" + rest, disjoint_union(complete(p), co_k(q))};
}

std::vector<Named> edgeless_upto(int m) {
    std::vector<Named> out;
    for (int r = 1; r <= m; ++r) out.push_back(coK(r));
    return out;
}

std::vector<IsoKey> keys_of(const std::vector<Named>& graphs) {
    std::set<IsoKey> keys;
    for (const auto& n : graphs) keys.insert(canonical_key(n.graph));
    return {keys.begin(), keys.end()};
}

std::string describe(const std::vector<IsoKey>& keys, const std::vector<Named>& labels) {
    std::map<IsoKey, std::string> names;
    for (const auto& n : labels) names.emplace(canonical_key(n.graph), n.label);
    std::string out = "{";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto it = names.find(keys[i]);
        out += (i ? ", " : "") + (it != names.end() ? it->second : keys[i].graph6);
    }
    return out + "}";
}

std::string describe(const std::vector<Named>& graphs) { return describe(keys_of(graphs), graphs); }

FamilyResult family(const Context& ctx, const Graph& g, Param p) { return family_from_sets(g, p, ctx.sets(g, p)); }

std::string name_param(Param p) { return std::string(param_name(p)); }

struct FamilyCase {
    std::string name;
    Graph graph;
    Param param;
    std::vector<Named> expected;
};

void check_family(Checker& ck, const Context& ctx, const FamilyCase& c) {
    const FamilyResult fam = family(ctx, c.graph, c.param);
    const auto want = keys_of(c.expected);
    const auto got = fam.keys();
    ck.require(fam.excellent && got == want, c.name + "<" + name_param(c.param) + "> = " +
                                                 describe(got, c.expected) + ", expected " + describe(c.expected));
}

// Paths and cycles

Outcome path_cycle_values(const Context& ctx) {
    Checker ck("gamma(P_n) = i(P_n) = ceil(n/3) for n = 1..21 and gamma(C_n) = ceil(n/3) for n = 3..21");
    for (int n = 1; n <= 21; ++n) {
        const int want = (n + 2) / 3;
        const Graph g = path(n);
        const int gv = ctx.sets(g, Param::gamma).value;
        const int iv = ctx.sets(g, Param::i).value;
        ck.require(gv == want && iv == want, "P" + std::to_string(n) + ": gamma=" + std::to_string(gv) +
                                                 " i=" + std::to_string(iv) + ", expected " + std::to_string(want));
    }
    for (int n = 3; n <= 21; ++n) {
        const int want = (n + 2) / 3;
        const int gv = ctx.sets(cycle(n), Param::gamma).value;
        ck.require(gv == want, "C" + std::to_string(n) + ": gamma=" + std::to_string(gv) + ", expected " +
                                   std::to_string(want));
    }
    return ck.finish();
}

Outcome path_cycle_excellence(const Context& ctx) {
    Checker ck("for gamma and i: C_n excellent for 3 <= n <= 21; P_n excellent iff n = 2 or n = 1 mod 3 (n <= 21)");
    for (Param p : {Param::gamma, Param::i}) {
        for (int n = 3; n <= 21; ++n) {
            const Graph g = cycle(n);
            ck.require(is_excellent(g, ctx.sets(g, p)),
                       "C" + std::to_string(n) + " not " + name_param(p) + "-excellent");
        }
        for (int n = 1; n <= 21; ++n) {
            const Graph g = path(n);
            const bool want = n == 2 || n % 3 == 1;
            const bool got = is_excellent(g, ctx.sets(g, p));
            ck.require(got == want, "P" + std::to_string(n) + " " + name_param(p) + "-excellent=" +
                                        (got ? "true" : "false"));
        }
    }
    return ck.finish();
}

Outcome path_cycle_families(const Context& ctx) {
    Checker ck(
        "P4, C5: {K1, co-K2}; P7, P10, C6, C9, C12: {K1}; C7<gamma> = {K1, K2, co-K2, co-K3}; "
        "C4, C10, C13<gamma> = {K1, K2, co-K2}; C7<i> = {K1, co-K2, co-K3}; C10, C13<i> = {K1, co-K2}");
    std::vector<FamilyCase> cases;
    for (Param p : {Param::gamma, Param::i}) {
        cases.push_back({"P4", path(4), p, {coK(1), coK(2)}});
        cases.push_back({"P7", path(7), p, {coK(1)}});
        cases.push_back({"P10", path(10), p, {coK(1)}});
        cases.push_back({"C5", cycle(5), p, {coK(1), coK(2)}});
        for (int n : {6, 9, 12}) cases.push_back({"C" + std::to_string(n), cycle(n), p, {coK(1)}});
    }
    cases.push_back({"C7", cycle(7), Param::gamma, {coK(1), K(2), coK(2), coK(3)}});
    cases.push_back({"C7", cycle(7), Param::i, {coK(1), coK(2), coK(3)}});
    cases.push_back({"C4", cycle(4), Param::gamma, {coK(1), K(2), coK(2)}});
    for (int n : {10, 13}) {
        cases.push_back({"C" + std::to_string(n), cycle(n), Param::gamma, {coK(1), K(2), coK(2)}});
        cases.push_back({"C" + std::to_string(n), cycle(n), Param::i, {coK(1), coK(2)}});
    }
    for (const auto& c : cases) check_family(ck, ctx, c);
    return ck.finish();
}

Outcome cycle_unions(const Context& ctx) {
    Checker ck(
        "C5+C5: {co-K1..co-K4}; C7+C7: {co-K1..co-K6, K2}; C6+C9: {K1}; C10+C10: {K1, K2, co-K2}");
    auto seven = edgeless_upto(6);
    seven.push_back(K(2));
    const std::vector<FamilyCase> cases = {
        {"C5+C5", join_all({cycle(5), cycle(5)}), Param::gamma, edgeless_upto(4)},
        {"C7+C7", join_all({cycle(7), cycle(7)}), Param::gamma, seven},
        {"C6+C9", join_all({cycle(6), cycle(9)}), Param::gamma, {coK(1)}},
        {"C10+C10", join_all({cycle(10), cycle(10)}), Param::gamma, {coK(1), K(2), coK(2)}},
    };
    for (const auto& c : cases) check_family(ck, ctx, c);
    return ck.finish();
}

std::vector<std::pair<int, int>> grid_orders() { return {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}, {3, 5}}; }

Outcome complete_grids(const Context& ctx) {
    Checker ck(
        "K_m box K_n: gamma = i = beta0 = m; i- and beta0-families {co-K1..co-K_m}; gamma-family {co-K1..co-K_m} "
        "if m < n, plus {K1..K_m} and {K_p + co-K_q : p >= 2, q >= 1, p + q <= m} if m = n");
    for (auto [m, n] : grid_orders()) {
        const std::string name = "K" + std::to_string(m) + " box K" + std::to_string(n);
        const Graph g = cartesian_product(complete(m), complete(n)).graph;
        std::vector<Named> gamma_family = edgeless_upto(m);
        if (m == n) {
            for (int p = 2; p <= m; ++p) gamma_family.push_back(K(p));
            for (int p = 2; p <= m; ++p)
                for (int q = 1; p + q <= m; ++q) gamma_family.push_back(KplusCoK(p, q));
        }
        for (Param p : {Param::gamma, Param::i, Param::beta0}) {
            const int v = ctx.sets(g, p).value;
            ck.require(v == m, name + ": " + name_param(p) + "=" + std::to_string(v));
        }
        check_family(ck, ctx, {name, g, Param::gamma, gamma_family});
        check_family(ck, ctx, {name, g, Param::i, edgeless_upto(m)});
        check_family(ck, ctx, {name, g, Param::beta0, edgeless_upto(m)});
    }
    return ck.finish();
}

Outcome complement_grids(const Context& ctx) {
    Checker ck(
        "complement(K3 box K_n), n = 3,4,5: {K1, K2, co-K2, K2+K1, co-K3, K3}; complement(K4 box K4): "
        "{K1, K2, co-K2, K2+K1, K3}");
    const std::vector<Named> three = {coK(1), K(2), coK(2), KplusCoK(2, 1), coK(3), K(3)};
    const std::vector<Named> four = {coK(1), K(2), coK(2), KplusCoK(2, 1), K(3)};
    for (int n = 3; n <= 5; ++n)
        check_family(ck, ctx,
                     {"complement(K3 box K" + std::to_string(n) + ")",
                      complement(cartesian_product(complete(3), complete(n)).graph), Param::gamma, three});
    check_family(ck, ctx,
                 {"complement(K4 box K4)", complement(cartesian_product(complete(4), complete(4)).graph),
                  Param::gamma, four});
    return ck.finish();
}

Outcome no_p3_excellent(const Context& ctx) {
    Checker ck("no connected graph of order <= 7 with gamma = 3 is P3-gamma-excellent");
    std::size_t with_three = 0;
    for (int n = 1; n <= 7; ++n) {
        const Catalog c = generate_all_graphs(n, true);
        for (const Graph& g : c.graphs) {
            const ParamResult sets = ctx.sets(g, Param::gamma);
            if (sets.value != 3) continue;
            ++with_three;
            ck.require(!check_h_excellent(g, path(3), sets).excellent(), to_graph6(g) + " is P3-gamma-excellent");
        }
    }
    ck.note(std::to_string(with_three) + " connected graphs with gamma = 3");
    ck.require(with_three > 0, "no graph with gamma = 3 was examined");
    return ck.finish();
}

Outcome regular_catalogs(const Context& ctx) {
    Checker ck(
        "generate_regular(10,5): 60 graphs, all gamma = 2; generate_regular(9,4): 16 graphs, exactly 2 "
        "K3-gamma-excellent, exactly 1 isomorphic to K3 box K3");
    const Catalog ten = generate_regular(10, 5, false);
    ck.require(ten.size() == 60, "(10,5) count " + std::to_string(ten.size()));
    for (const Graph& g : ten.graphs) {
        const int v = ctx.sets(g, Param::gamma).value;
        ck.require(v == 2, to_graph6(g) + " has gamma " + std::to_string(v));
    }
    const Catalog nine = generate_regular(9, 4, false);
    ck.require(nine.size() == 16, "(9,4) count " + std::to_string(nine.size()));

    const IsoKey grid = canonical_key(cartesian_product(complete(3), complete(3)).graph);
    std::vector<std::string> excellent;
    std::size_t grids = 0;
    bool grid_excellent = false;
    for (std::size_t i = 0; i < nine.size(); ++i) {
        const Graph& g = nine.graphs[i];
        const bool ok = check_h_excellent(g, complete(3), ctx.sets(g, Param::gamma)).excellent();
        if (ok) excellent.push_back(to_graph6(g));
        if (nine.keys[i] == grid) {
            ++grids;
            grid_excellent = ok;
        }
    }
    std::string listed;
    for (const auto& s : excellent) listed += (listed.empty() ? "" : " ") + s;
    ck.require(excellent.size() == 2,
               std::to_string(excellent.size()) + " K3-gamma-excellent graphs (" + listed + ")");
    ck.require(grids == 1 && grid_excellent, "K3 box K3 occurs " + std::to_string(grids) +
                                                 " times, excellent=" + (grid_excellent ? "true" : "false"));
    return ck.finish();
}

Outcome grid_cycle_product(const Context& ctx) {
    Checker ck("K5 box C5: gamma = 5 and C5-gamma-excellent; gamma(G box H) >= min(|G|, |H|) on every product built here");
    const CartesianProduct kc = cartesian_product(complete(5), cycle(5));
    const ParamResult sets = ctx.sets(kc.graph, Param::gamma);
    ck.require(sets.value == 5, "gamma(K5 box C5) = " + std::to_string(sets.value));
    const HExcellence h = check_h_excellent(kc.graph, cycle(5), sets);
    ck.require(h.excellent(), std::string("K5 box C5 C5-gamma-excellent: condition (i) ") +
                                  (h.condition_i ? "holds" : "fails") + ", condition (ii) " +
                                  (h.condition_ii ? "holds" : "fails"));

    std::vector<std::pair<std::string, CartesianProduct>> products;
    for (auto [m, n] : grid_orders())
        products.emplace_back("K" + std::to_string(m) + " box K" + std::to_string(n),
                              cartesian_product(complete(m), complete(n)));
    products.emplace_back("K5 box C5", kc);
    products.emplace_back("P2 box P2", cartesian_product(path(2), path(2)));
    products.emplace_back("C4 box C4", cartesian_product(cycle(4), cycle(4)));
    products.emplace_back("P3 box C5", cartesian_product(path(3), cycle(5)));
    for (const auto& [name, prod] : products) {
        for (const BoundCheck& b : bound_checks(prod.graph, prod.index)) {
            if (b.name != "cartesian product lower bound") continue;
            ck.require(b.applicable && b.pass,
                       name + ": gamma = " + std::to_string(b.computed) + " against bound " + b.bound);
        }
    }
    return ck.finish();
}

struct LexCase {
    std::string name;
    Graph base;
    std::vector<Graph> fibers;
    bool all_six;
};

Outcome lex_parameter_coincidence(const Context& ctx) {
    Checker ck(
        "G[Phi] with G connected of order >= 2 and fibers of order >= 3: gamma, gamma_r, gamma_oc families coincide and "
        "gamma_t, gamma_tr, gamma_t_oc families coincide; all six coincide when every fiber has gamma >= 3");
    const std::vector<LexCase> cases = {
        {"P2[P3, C4]", path(2), {path(3), cycle(4)}, false},
        {"P2[C4, C4]", path(2), {cycle(4), cycle(4)}, false},
        {"P3[P3, C4, P3]", path(3), {path(3), cycle(4), path(3)}, false},
        {"P3[C4, P3, C4]", path(3), {cycle(4), path(3), cycle(4)}, false},
        {"P2[P7, P7]", path(2), {path(7), path(7)}, true},
        {"P3[P7, P7, P7]", path(3), {path(7), path(7), path(7)}, true},
    };
    std::size_t excellent = 0;
    for (const auto& c : cases) {
        const Graph g = generalized_lex_product(c.base, c.fibers).graph;
        std::map<Param, std::vector<IsoKey>> fams;
        for (Param p : {Param::gamma, Param::gamma_r, Param::gamma_oc, Param::gamma_t, Param::gamma_tr,
                        Param::gamma_t_oc})
            fams[p] = family(ctx, g, p).keys();
        auto same = [&](Param a, Param b) {
            ck.require(fams[a] == fams[b], c.name + ": " + name_param(a) + "-family " + describe(fams[a], {}) +
                                               " differs from " + name_param(b) + "-family " +
                                               describe(fams[b], {}));
        };
        same(Param::gamma, Param::gamma_r);
        same(Param::gamma, Param::gamma_oc);
        same(Param::gamma_t, Param::gamma_tr);
        same(Param::gamma_t, Param::gamma_t_oc);
        if (c.all_six) same(Param::gamma, Param::gamma_t);
        if (!fams[Param::gamma].empty()) ++excellent;
    }
    ck.require(excellent > 0, "no instance is gamma-excellent");
    ck.note(std::to_string(excellent) + " of " + std::to_string(cases.size()) + " instances gamma-excellent");
    return ck.finish();
}

Outcome lex_complete_fibers(const Context& ctx) {
    Checker ck(
        "G in {P3, P4, C5} with complete fibers of order 2 or 3: G[Phi] is co-K_s-gamma-excellent iff G is (s = 1, 2), "
        "and gamma(G[Phi]) = gamma(G)");
    const std::vector<std::pair<std::string, Graph>> bases = {{"P3", path(3)}, {"P4", path(4)}, {"C5", cycle(5)}};
    for (const auto& [bname, base] : bases) {
        const int n = base.order();
        std::vector<std::pair<std::string, std::vector<Graph>>> fiberings;
        fiberings.emplace_back("K2", std::vector<Graph>(n, complete(2)));
        fiberings.emplace_back("K3", std::vector<Graph>(n, complete(3)));
        std::vector<Graph> mixed;
        for (int i = 0; i < n; ++i) mixed.push_back(complete(i % 2 == 0 ? 2 : 3));
        fiberings.emplace_back("K2/K3", mixed);

        const ParamResult base_sets = ctx.sets(base, Param::gamma);
        for (const auto& [fname, fibers] : fiberings) {
            const Graph g = generalized_lex_product(base, fibers).graph;
            const ParamResult sets = ctx.sets(g, Param::gamma);
            const std::string name = bname + "[" + fname + "]";
            ck.require(sets.value == base_sets.value, name + ": gamma " + std::to_string(sets.value) + " vs " +
                                                          std::to_string(base_sets.value));
            for (int s = 1; s <= 2; ++s) {
                const bool lhs = check_h_excellent(g, co_k(s), sets).excellent();
                const bool rhs = check_h_excellent(base, co_k(s), base_sets).excellent();
                ck.require(lhs == rhs, name + ": co-K" + std::to_string(s) + "-gamma-excellent " +
                                           (lhs ? "true" : "false") + " but " + bname + " " + (rhs ? "true" : "false"));
            }
        }
    }
    return ck.finish();
}

// Labelled trees reachable from labelled 1-coronas by repeated gluing, keyed by tree shape.
std::map<std::string, std::vector<LabeledTree>> operation_closure(int max_order) {
    std::vector<LabeledTree> coronas;
    for (int base = 2; 2 * base <= max_order; ++base)
        for (const Graph& u : enumerate_trees(base)) coronas.push_back(labeled_corona(u));

    std::set<std::string> seen;
    std::vector<LabeledTree> members;
    auto add = [&](LabeledTree t) {
        if (seen.insert(labeled_tree_key(t.tree, t.ones)).second) members.push_back(std::move(t));
    };
    for (const auto& c : coronas) add(c);
    for (std::size_t next = 0; next < members.size(); ++next) {
        const LabeledTree t = members[next];
        for (const auto& c : coronas) {
            if (t.tree.order() + c.tree.order() - 1 > max_order) continue;
            for (int u : t.zeros())
                for (int v : c.zeros()) add(operation_o(t, c, u, v));
        }
    }
    std::map<std::string, std::vector<LabeledTree>> out;
    for (auto& m : members) out[tree_key(m.tree)].push_back(std::move(m));
    return out;
}

Outcome tree_characterisation(const Context& ctx) {
    Checker ck(
        "trees of order 4..12 (551 at order 12): gamma-excellent iff some labelling is reachable from labelled "
        "1-coronas by gluing, that labelling has 0-class = V- (a gamma-set) and 1-class = V=; the gamma-family of "
        "every gamma-excellent tree equals tree_family_prediction");
    const auto closure = operation_closure(12);
    std::size_t excellent_count = 0;
    for (int n = 4; n <= 12; ++n) {
        const auto trees = enumerate_trees(n);
        if (n == 12) ck.require(trees.size() == 551, "order-12 tree count " + std::to_string(trees.size()));
        for (const Graph& t : trees) {
            const std::string g6 = to_graph6(t);
            const ParamResult sets = ctx.sets(t, Param::gamma);
            const bool excellent = is_excellent(t, sets);
            auto it = closure.find(tree_key(t));
            const bool reachable = it != closure.end();
            ck.require(excellent == reachable, g6 + ": excellent=" + (excellent ? "true" : "false") +
                                                   " reachable=" + (reachable ? "true" : "false"));
            if (!excellent) continue;
            ++excellent_count;
            if (reachable) {
                const VertexSplit split = v_minus_equal(t);
                const std::string want = labeled_tree_key(t, split.equal);
                for (const LabeledTree& lt : it->second)
                    ck.require(labeled_tree_key(lt.tree, lt.ones) == want,
                               g6 + ": reachable labelling differs from (V-, V=)");
                const bool gamma_set = split.minus.size() == sets.value && satisfies(t, split.minus, Param::gamma);
                ck.require(gamma_set, g6 + ": V- is not a gamma-set");
            }
            const auto fam = family_from_sets(t, Param::gamma, sets).keys();
            const auto predicted = tree_family_prediction(t);
            ck.require(fam == predicted, g6 + ": family " + describe(fam, {}) + " vs prediction " +
                                             describe(predicted, {}));
        }
    }
    ck.note(std::to_string(excellent_count) + " gamma-excellent trees");
    return ck.finish();
}

Outcome cycle_coalescence(const Context& ctx) {
    Checker ck("coalescence of two C7 at any pair of vertices: gamma = 5, glued vertex in V-, K2-gamma-excellent");
    for (int u = 0; u < 7; ++u) {
        for (int v = 0; v < 7; ++v) {
            const Coalescence c = coalescence({{cycle(7), u}, {cycle(7), v}});
            const std::string name = "C7.C7(" + std::to_string(u) + "," + std::to_string(v) + ")";
            const ParamResult sets = ctx.sets(c.graph, Param::gamma);
            ck.require(sets.value == 5, name + ": gamma " + std::to_string(sets.value));
            const int without = ctx.sets(c.graph.without_vertex(c.glued), Param::gamma).value;
            ck.require(without + 1 == sets.value, name + ": glued vertex not in V-");
            ck.require(check_h_excellent(c.graph, complete(2), sets).excellent(), name + ": not K2-gamma-excellent");
        }
    }
    return ck.finish();
}

// Plain subset enumeration straight from the definitions, sharing nothing with the solver.
bool reference_predicate(const Graph& g, std::uint64_t s, Param p) {
    const int n = g.order();
    auto in = [&](int v) { return (s >> v) & 1u; };
    auto has_neighbor_in = [&](int v, bool inside) {
        for (int w = 0; w < n; ++w)
            if (w != v && g.has_edge(v, w) && in(w) == inside) return true;
        return false;
    };
    auto dominating = [&] {
        for (int v = 0; v < n; ++v)
            if (!in(v) && !has_neighbor_in(v, true)) return false;
        return true;
    };
    auto total = [&] {
        for (int v = 0; v < n; ++v)
            if (!has_neighbor_in(v, true)) return false;
        return true;
    };
    auto independent = [&] {
        for (int v = 0; v < n; ++v)
            if (in(v) && has_neighbor_in(v, true)) return false;
        return true;
    };
    auto restrained = [&] {
        for (int v = 0; v < n; ++v)
            if (!in(v) && !has_neighbor_in(v, false)) return false;
        return true;
    };
    auto outside_connected = [&] {
        int start = -1;
        int outside = 0;
        for (int v = 0; v < n; ++v)
            if (!in(v)) {
                ++outside;
                if (start < 0) start = v;
            }
        if (outside == 0) return true;
        std::vector<int> stack = {start};
        std::vector<bool> seen(n, false);
        seen[start] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (!seen[w] && !in(w) && g.has_edge(v, w)) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == outside;
    };
    switch (p) {
        case Param::gamma: return dominating();
        case Param::i: return independent() && dominating();
        case Param::beta0: return independent();
        case Param::gamma_t: return total();
        case Param::gamma_r: return dominating() && restrained();
        case Param::gamma_oc: return dominating() && outside_connected();
        case Param::gamma_tr: return total() && restrained();
        case Param::gamma_t_oc: return total() && outside_connected();
    }
    return false;
}

std::optional<ParamResult> reference_sets(const Graph& g, Param p) {
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    std::optional<ParamResult> best;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (!reference_predicate(g, s, p)) continue;
        const int size = std::popcount(s);
        const bool better = !best || (p == Param::beta0 ? size > best->value : size < best->value);
        if (better) best = ParamResult{size, {}};
        if (best->value == size) best->sets.push_back(VertexSet(s));
    }
    return best;
}

Outcome solver_cross_check(const Context& ctx) {
    Checker ck(
        "min_sets agrees with plain subset enumeration (value and every optimal set) for all 8 parameters on all "
        "graphs of order 1..7 and 200 random order-8 graphs");
    std::vector<Graph> graphs;
    for (int n = 1; n <= 7; ++n) {
        Catalog c = generate_all_graphs(n, false);
        for (auto& g : c.graphs) graphs.push_back(std::move(g));
    }
    std::mt19937_64 rng(0x5eed0008);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 200; ++k) {
        Graph g(8);
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                if (coin(rng)) g.add_edge(a, b);
        graphs.push_back(std::move(g));
    }
    for (const Graph& g : graphs) {
        for (Param p : kAllParams) {
            const auto want = reference_sets(g, p);
            std::optional<ParamResult> got;
            try {
                got = ctx.sets(g, p);
            } catch (const UndefinedParameter&) {
            }
            bool same = want.has_value() == got.has_value();
            if (same && want) same = want->value == got->value && want->sets == got->sets;
            ck.require(same, to_graph6(g) + " " + name_param(p) + ": solver " +
                                 (got ? std::to_string(got->value) + "/" + std::to_string(got->sets.size()) + " sets"
                                      : "undefined") +
                                 ", enumeration " +
                                 (want ? std::to_string(want->value) + "/" + std::to_string(want->sets.size()) +
                                             " sets"
                                       : "undefined"));
        }
    }
    ck.note(std::to_string(graphs.size()) + " graphs");
    return ck.finish();
}

Outcome order12_search(const Context& ctx) {
    Checker ck("the connected 5-regular graphs of order 12 include at least one K3-gamma-excellent graph");
    const Catalog c = generate_regular(12, 5, true);
    std::vector<std::string> found;
    for (const Graph& g : c.graphs) {
        const ParamResult sets = ctx.sets(g, Param::gamma);
        if (sets.value != 3) continue;
        if (check_h_excellent(g, complete(3), sets).excellent()) found.push_back(to_graph6(g));
    }
    ck.require(!found.empty(), "no match among " + std::to_string(c.size()) + " graphs");
    for (const auto& g6 : found) {
        const Graph g = from_graph6(g6);
        ck.require(g.order() <= 3 * (5 - 3 + 2), g6 + " violates n <= r(s - r + 2)");
    }
    std::string listed;
    for (const auto& s : found) listed += (listed.empty() ? "" : " ") + s;
    ck.note(std::to_string(c.size()) + " connected graphs, " + std::to_string(found.size()) + " matches: " + listed);
    return ck.finish();
}

// Supplementary claims

bool is_complete_multipartite_min2(const Graph& g) {
    // The complement must be a disjoint union of cliques of order >= 2, with at least two of them.
    const Graph co = complement(g);
    VertexSet left = co.vertices();
    int parts = 0;
    while (!left.empty()) {
        const int v = left.front();
        const VertexSet part = co.closed_neighbors(v);
        if (part.size() < 2) return false;
        for (int w : part)
            if (co.closed_neighbors(w) != part) return false;
        left = left - part;
        ++parts;
    }
    return parts >= 2;
}

Outcome multipartite_pairs(const Context& ctx) {
    Checker ck(
        "connected graphs of order <= 7 with gamma = 2 are K2-gamma-excellent iff complete multipartite with parts of "
        "order >= 2; K_{2,2,2}<gamma> = {K1, K2, co-K2}; K_{2,3}, K_{3,3}, K_{2,2,3} have family {K1, K2}");
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : generate_all_graphs(n, true).graphs) {
            const ParamResult sets = ctx.sets(g, Param::gamma);
            if (sets.value != 2) continue;
            const bool excellent = check_h_excellent(g, complete(2), sets).excellent();
            ck.require(excellent == is_complete_multipartite_min2(g),
                       to_graph6(g) + ": K2-gamma-excellent=" + (excellent ? "true" : "false"));
        }
    }
    check_family(ck, ctx, {"K_{2,2,2}", complete_multipartite({2, 2, 2}), Param::gamma, {coK(1), K(2), coK(2)}});
    check_family(ck, ctx, {"K_{2,3}", complete_multipartite({2, 3}), Param::gamma, {coK(1), K(2)}});
    check_family(ck, ctx, {"K_{3,3}", complete_multipartite({3, 3}), Param::gamma, {coK(1), K(2)}});
    check_family(ck, ctx, {"K_{2,2,3}", complete_multipartite({2, 2, 3}), Param::gamma, {coK(1), K(2)}});
    return ck.finish();
}

Outcome critical_pairs(const Context& ctx) {
    Checker ck(
        "every non-complete graph of order <= 7 in which each added edge changes gamma is {K1, co-K2}-gamma-excellent");
    std::size_t examined = 0;
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : generate_all_graphs(n, false).graphs) {
            if (g.edge_count() == n * (n - 1) / 2 || !is_cea(g)) continue;
            ++examined;
            const ParamResult sets = ctx.sets(g, Param::gamma);
            const bool ok = check_h_excellent(g, complete(1), sets).excellent() &&
                            check_h_excellent(g, co_k(2), sets).excellent();
            ck.require(ok, to_graph6(g) + " is not {K1, co-K2}-gamma-excellent");
        }
    }
    ck.note(std::to_string(examined) + " graphs");
    return ck.finish();
}

Outcome independence_equals_domination(const Context& ctx) {
    Checker ck(
        "graphs of order <= 7 with beta0 = gamma = s: co-K_r-gamma-excellent for r = 1..s, and the i- and "
        "beta0-families are {co-K1..co-K_s}");
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : generate_all_graphs(n, false).graphs) {
            const ParamResult gsets = ctx.sets(g, Param::gamma);
            const ParamResult bsets = ctx.sets(g, Param::beta0);
            if (gsets.value != bsets.value) continue;
            const int s = gsets.value;
            const std::string g6 = to_graph6(g);
            for (int r = 1; r <= s; ++r)
                ck.require(check_h_excellent(g, co_k(r), gsets).excellent(),
                           g6 + " not co-K" + std::to_string(r) + "-gamma-excellent");
            const auto want = keys_of(edgeless_upto(s));
            ck.require(family_from_sets(g, Param::i, ctx.sets(g, Param::i)).keys() == want, g6 + ": i-family");
            ck.require(family_from_sets(g, Param::beta0, bsets).keys() == want, g6 + ": beta0-family");
        }
    }
    return ck.finish();
}

Outcome family_observations(const Context& ctx) {
    Checker ck(
        "on all graphs of order <= 6: every excellent graph has K1 in its family and no member larger than the "
        "parameter; parameters with identical optimal-set collections give identical families");
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : generate_all_graphs(n, false).graphs) {
            const std::string g6 = to_graph6(g);
            std::vector<std::pair<Param, ParamResult>> results;
            for (Param p : kAllParams) {
                try {
                    results.emplace_back(p, ctx.sets(g, p));
                } catch (const UndefinedParameter&) {
                }
            }
            std::vector<std::vector<IsoKey>> fams;
            for (const auto& [p, sets] : results) {
                const FamilyResult f = family_from_sets(g, p, sets);
                fams.push_back(f.keys());
                if (!f.excellent) continue;
                ck.require(!f.members.empty() && f.members.front().key == canonical_key(complete(1)),
                           g6 + ": K1 missing from " + name_param(p) + "-family");
                ck.require(f.members.back().key.order <= f.value, g6 + ": oversized " + name_param(p) + " member");
            }
            for (std::size_t a = 0; a < results.size(); ++a)
                for (std::size_t b = a + 1; b < results.size(); ++b)
                    if (results[a].second.sets == results[b].second.sets)
                        ck.require(fams[a] == fams[b], g6 + ": " + name_param(results[a].first) + " and " +
                                                           name_param(results[b].first) + " families differ");
        }
    }
    return ck.finish();
}

Outcome degree_bounds(const Context& ctx) {
    (void)ctx;
    Checker ck("gamma <= n*delta/(3*delta - 1) on the regular catalogs (8,3), (10,3), (9,4), (10,4), (10,5) and on "
               "all graphs of order <= 7 with delta in {3,4,5}");
    std::vector<Graph> graphs;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {10, 3}, {9, 4}, {10, 4}, {10, 5}})
        for (auto& g : generate_regular(n, k, false).graphs) graphs.push_back(std::move(g));
    for (int n = 4; n <= 7; ++n)
        for (auto& g : generate_all_graphs(n, false).graphs)
            if (min_degree(g) >= 3) graphs.push_back(std::move(g));
    for (const Graph& g : graphs)
        for (const BoundCheck& b : bound_checks(g))
            if (b.applicable) ck.require(b.pass, to_graph6(g) + ": gamma " + std::to_string(b.computed) + " > " + b.bound);
    return ck.finish();
}

Outcome regular_clique_bounds(const Context& ctx) {
    Checker ck(
        "connected s-regular K3-gamma-excellent graphs with gamma = 3 satisfy n <= 3(s - 1); none is cubic (even order "
        "4..12); none is 5-regular below order 12");
    auto scan = [&](int n, int s, bool expect_none) {
        for (const Graph& g : generate_regular(n, s, true).graphs) {
            const ParamResult sets = ctx.sets(g, Param::gamma);
            if (sets.value != 3 || !check_h_excellent(g, complete(3), sets).excellent()) continue;
            ck.require(!expect_none, to_graph6(g) + " is an unexpected " + std::to_string(s) + "-regular match");
            ck.require(n <= 3 * (s - 1), to_graph6(g) + " violates n <= 3(s - 1)");
        }
    };
    for (int n = 4; n <= 12; n += 2) scan(n, 3, true);
    for (int n = 6; n <= 10; n += 2) scan(n, 5, true);
    for (int n = 5; n <= 10; ++n) scan(n, 4, false);
    return ck.finish();
}

std::vector<Named> small_connected() {
    std::vector<Named> out;
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : generate_all_graphs(n, true).graphs) out.push_back({to_graph6(g), g});
    out.push_back({"P5", path(5)});
    out.push_back({"P6", path(6)});
    out.push_back({"C5", cycle(5)});
    out.push_back({"C6", cycle(6)});
    out.push_back({"C7", cycle(7)});
    return out;
}

Outcome coalescence_cut_vertex(const Context& ctx) {
    Checker ck(
        "G = (F.H)(x): x in V-(G) iff x in V-(F) and x in V-(H); then gamma(G) = gamma(F) + gamma(H) - 1 (F, H "
        "connected of order 2..4, plus P5, P6, C5, C6, C7)");
    const auto parts = small_connected();
    auto gamma = [&](const Graph& g) { return ctx.sets(g, Param::gamma).value; };
    for (const auto& f : parts) {
        for (const auto& h : parts) {
            const int gf = gamma(f.graph);
            const int gh = gamma(h.graph);
            for (int u = 0; u < f.graph.order(); ++u) {
                const bool in_f = gamma(f.graph.without_vertex(u)) < gf;
                for (int v = 0; v < h.graph.order(); ++v) {
                    const bool in_h = gamma(h.graph.without_vertex(v)) < gh;
                    const Coalescence c = coalescence({{f.graph, u}, {h.graph, v}});
                    const int gg = gamma(c.graph);
                    const bool in_g = gamma(c.graph.without_vertex(c.glued)) < gg;
                    const std::string name = f.label + "." + h.label + "(" + std::to_string(u) + "," +
                                             std::to_string(v) + ")";
                    ck.require(in_g == (in_f && in_h), name + ": V- membership mismatch");
                    if (in_g) ck.require(gg == gf + gh - 1, name + ": gamma " + std::to_string(gg));
                }
            }
        }
    }
    return ck.finish();
}

Outcome coalescence_excellence(const Context& ctx) {
    Checker ck(
        "coalescences of K2-gamma-excellent graphs through a vertex of V- are K2-gamma-excellent (C4.C4, C7.C7.C7, "
        "C10.C7, C4.C7)");
    const std::vector<std::pair<std::string, std::vector<Graph>>> cases = {
        {"C4.C4", {cycle(4), cycle(4)}},
        {"C7.C7.C7", {cycle(7), cycle(7), cycle(7)}},
        {"C10.C7", {cycle(10), cycle(7)}},
        {"C4.C7", {cycle(4), cycle(7)}},
    };
    for (const auto& [name, graphs] : cases) {
        std::vector<std::pair<Graph, int>> parts;
        for (const Graph& g : graphs) {
            ck.require(check_h_excellent(g, complete(2), ctx.sets(g, Param::gamma)).excellent(),
                       name + ": a part is not K2-gamma-excellent");
            parts.emplace_back(g, 0);
        }
        const Coalescence c = coalescence(parts);
        const ParamResult sets = ctx.sets(c.graph, Param::gamma);
        const int without = ctx.sets(c.graph.without_vertex(c.glued), Param::gamma).value;
        ck.require(without < sets.value, name + ": glued vertex not in V-");
        ck.require(check_h_excellent(c.graph, complete(2), sets).excellent(), name + ": not K2-gamma-excellent");
    }
    return ck.finish();
}

bool is_bridge(const Graph& g, int a, int b) {
    Graph cut = g;
    cut.remove_edge(a, b);
    return !is_connected(cut);
}

Outcome bridge_neighbours(const Context& ctx) {
    Checker ck(
        "connected graphs of order <= 7, x in V-: no gamma-set contains both ends of a bridge at x, nor the far ends of "
        "two bridges at x");
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : generate_all_graphs(n, true).graphs) {
            const ParamResult sets = ctx.sets(g, Param::gamma);
            const std::string g6 = to_graph6(g);
            for (int x = 0; x < n; ++x) {
                if (ctx.sets(g.without_vertex(x), Param::gamma).value >= sets.value) continue;
                std::vector<int> far;
                for (int y : g.neighbors(x))
                    if (is_bridge(g, x, y)) far.push_back(y);
                for (const VertexSet& d : sets.sets) {
                    for (int y : far)
                        ck.require(!(d.contains(x) && d.contains(y)), g6 + ": gamma-set " + d.to_string() +
                                                                          " holds bridge " + std::to_string(x) + "-" +
                                                                          std::to_string(y));
                    for (std::size_t a = 0; a < far.size(); ++a)
                        for (std::size_t b = a + 1; b < far.size(); ++b)
                            ck.require(!(d.contains(far[a]) && d.contains(far[b])),
                                       g6 + ": gamma-set " + d.to_string() + " holds both far bridge ends at " +
                                           std::to_string(x));
                }
            }
        }
    }
    return ck.finish();
}

std::vector<Claim> build_registry() {
    std::vector<Claim> r;
    auto add = [&](std::string id, std::string anchor, int criterion, bool quick, bool long_running,
                   std::function<Outcome(const Context&)> check) {
        r.push_back({std::move(id), std::move(anchor), criterion, quick, long_running, std::move(check)});
    };
    add("path-cycle-values", "paths and cycles: domination and independent domination", 1, true, false,
        path_cycle_values);
    add("path-cycle-excellence", "paths and cycles: excellence pattern", 2, true, false, path_cycle_excellence);
    add("path-cycle-families", "paths and cycles: excellent families", 3, true, false, path_cycle_families);
    add("cycle-unions", "disjoint unions of two cycles", 4, false, false, cycle_unions);
    add("complete-grids", "Cartesian products of complete graphs", 5, false, false, complete_grids);
    add("complement-grids", "complements of complete grids", 6, false, false, complement_grids);
    add("no-p3-excellent", "no P3-excellent graph with domination number 3", 7, false, false, no_p3_excellent);
    add("regular-catalogs", "4-regular order 9 and 5-regular order 10", 8, false, false, regular_catalogs);
    add("grid-cycle-product", "complete-by-cycle product and the product lower bound", 9, true, false,
        grid_cycle_product);
    add("lex-parameter-coincidence", "lexicographic products: six parameters", 10, false, false,
        lex_parameter_coincidence);
    add("lex-complete-fibers", "lexicographic products with complete fibers", 11, true, false, lex_complete_fibers);
    add("tree-characterisation", "gamma-excellent trees", 12, false, false, tree_characterisation);
    add("cycle-coalescence", "coalescence of two 7-cycles", 13, true, false, cycle_coalescence);
    add("solver-cross-check", "exact solver against subset enumeration", 14, false, false, solver_cross_check);
    add("order12-search", "5-regular K3-gamma-excellent graphs of order 12", 15, false, true, order12_search);

    add("multipartite-pairs", "K2-excellence with domination number 2", 0, false, false, multipartite_pairs);
    add("critical-pairs", "edge-critical graphs and non-adjacent pairs", 0, false, false, critical_pairs);
    add("independence-equals-domination", "graphs with independence number equal to domination number", 0, false,
        false, independence_equals_domination);
    add("family-observations", "basic family properties", 0, true, false, family_observations);
    add("degree-bounds", "minimum-degree upper bound on domination", 0, false, false, degree_bounds);
    add("regular-clique-bounds", "regular K3-gamma-excellent graphs", 0, false, false, regular_clique_bounds);
    add("coalescence-cut-vertex", "V- under coalescence", 0, false, false, coalescence_cut_vertex);
    add("coalescence-excellence", "K2-excellence under coalescence", 0, true, false, coalescence_excellence);
    add("bridge-neighbours", "bridges at vertices of V-", 0, false, false, bridge_neighbours);
    return r;
}

}  // namespace

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = build_registry();
    return claims;
}

std::vector<const Claim*> suite_claims(Suite s) {
    std::vector<const Claim*> out;
    for (const Claim& c : registry())
        if (s != Suite::quick || c.quick) out.push_back(&c);
    return out;
}

ClaimReport run_claim(const Claim& c, const Context& ctx) {
    ClaimReport rep;
    rep.id = c.id;
    rep.anchor = c.anchor;
    rep.criterion = c.criterion;
    if (c.long_running && !ctx.run_long) {
        rep.status = Status::skipped_long_running;
        rep.computed = "not run (pass --long)";
        return rep;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = c.check(ctx);
        rep.status = o.pass ? Status::pass : Status::fail;
        rep.expected = std::move(o.expected);
        rep.computed = std::move(o.computed);
    } catch (const std::exception& e) {
        rep.status = Status::fail;
        rep.expected = "claim completes";
        rep.computed = std::string("exception: ") + e.what();
    }
    rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<ClaimReport> run_suite(Suite s, Context ctx) {
    if (s == Suite::long_running) ctx.run_long = true;
    const auto claims = suite_claims(s);
    std::vector<ClaimReport> out(claims.size());
    const int count = static_cast<int>(claims.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) out[i] = run_claim(*claims[i], ctx);
    return out;
}

bool all_passed(const std::vector<ClaimReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.status != Status::fail; });
}

}  // namespace domex::claims
