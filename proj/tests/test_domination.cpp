#include "doctest.h"

#include <random>

#include "domex/construct.hpp"
#include "domex/domination.hpp"
#include "oracles.hpp"

using namespace domex;

TEST_CASE("parameter names round trip") {
    for (Param p : kAllParams) CHECK(parse_param(param_name(p)) == p);
    CHECK_FALSE(parse_param("gamma_x").has_value());
    CHECK(is_maximized(Param::beta0));
    CHECK_FALSE(is_maximized(Param::gamma));
    CHECK(is_total(Param::gamma_t_oc));
    CHECK_FALSE(is_total(Param::gamma_oc));
}

TEST_CASE("predicates on small examples") {
    CHECK(satisfies(cycle(5), VertexSet::of({0, 2}), Param::gamma));
    CHECK_FALSE(satisfies(cycle(5), VertexSet::of({0, 2}), Param::gamma_t));
    CHECK(satisfies(path(4), VertexSet::of({0, 3}), Param::gamma_r));
    CHECK_FALSE(satisfies(path(4), VertexSet::of({0, 1}), Param::gamma));
    CHECK(satisfies(path(4), VertexSet::of({1, 2}), Param::gamma_t));
    CHECK(satisfies(path(4), VertexSet::of({0, 2}), Param::i));
    CHECK_FALSE(satisfies(path(4), VertexSet::of({1, 2}), Param::i));
    CHECK(satisfies(cycle(6), VertexSet::of({0, 3}), Param::beta0));
    CHECK_FALSE(satisfies(path(5), VertexSet::of({0, 4}), Param::gamma_oc));
    CHECK(satisfies(path(5), VertexSet::of({0, 1, 3, 4}), Param::gamma_oc));
}

TEST_CASE("predicates agree with the definitions on random graphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 8;
        Graph g = oracle::random_graph(rng, n, 0.4);
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
        for (int k = 0; k < 16; ++k) {
            const std::uint64_t s = pick(rng);
            for (Param p : kAllParams) CHECK(satisfies(g, VertexSet(s), p) == oracle::predicate(g, s, p));
        }
    }
}

TEST_CASE("optimal set collections match exhaustive search") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + trial % 10;
        Graph g = oracle::random_graph(rng, n, 0.25 + 0.5 * ((trial % 3) / 2.0));
        for (Param p : kAllParams) {
            const auto want = oracle::optimal_sets(g, p);
            if (!want) {
                CHECK_THROWS_AS(min_sets(g, p), UndefinedParameter);
                continue;
            }
            const ParamResult got = min_sets(g, p);
            CHECK(got.value == want->value);
            CHECK(got.sets == want->sets);
        }
    }
}

TEST_CASE("known values") {
    CHECK(param_value(path(7), Param::gamma) == 3);
    const Graph k33 = cartesian_product(complete(3), complete(3)).graph;
    CHECK(param_value(k33, Param::gamma) == 3);
    const Graph ck34 = complement(cartesian_product(complete(3), complete(4)).graph);
    CHECK(param_value(ck34, Param::gamma) == oracle::gamma(ck34));
    CHECK(param_value(ck34, Param::gamma) == 3);
    CHECK(param_value(cycle(6), Param::beta0) == 3);
    CHECK(param_value(path(3), Param::gamma_t) == 2);
    CHECK(param_value(cycle(5), Param::i) == 2);
}

TEST_CASE("collections of optimal sets") {
    CHECK(min_sets(path(4), Param::gamma).sets ==
          std::vector<VertexSet>{VertexSet::of({0, 2}), VertexSet::of({1, 2}), VertexSet::of({0, 3}),
                                 VertexSet::of({1, 3})});

    const ParamResult c7 = min_sets(cycle(7), Param::gamma);
    CHECK(c7.value == 3);
    CHECK(c7.sets.size() == oracle::optimal_sets(cycle(7), Param::gamma)->sets.size());
    CHECK(c7.sets.size() == 14);

    for (int n = 1; n <= 6; ++n) {
        const ParamResult kn = min_sets(complete(n), Param::gamma);
        CHECK(kn.value == 1);
        CHECK(kn.sets.size() == static_cast<std::size_t>(n));
    }
    CHECK_THROWS_AS(min_sets(Graph(0), Param::gamma), UndefinedParameter);
}

TEST_CASE("total parameters are undefined with an isolated vertex") {
    CHECK_THROWS_AS(min_sets(Graph(1), Param::gamma_t), UndefinedParameter);
    CHECK_THROWS_AS(param_value(disjoint_union(path(3), Graph(1)), Param::gamma_tr), UndefinedParameter);
    CHECK(param_value(Graph(1), Param::gamma) == 1);
}

TEST_CASE("vertex splits") {
    const VertexSplit p4 = v_minus_equal(path(4));
    CHECK(p4.minus == VertexSet::of({0, 3}));
    CHECK(p4.equal == VertexSet::of({1, 2}));
    CHECK(v_minus_equal(cycle(7)).minus == cycle(7).vertices());
    // Deleting the centre of a star raises gamma, so it is in neither class.
    const VertexSplit star = v_minus_equal(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.minus.empty());
    CHECK(star.equal == VertexSet::of({1, 2, 3}));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + trial % 10, 0.35);
        const VertexSplit a = v_minus_equal(g);
        const VertexSplit b = v_minus_equal_serial(g);
        CHECK(a.minus == b.minus);
        CHECK(a.equal == b.equal);
        const int gamma = oracle::gamma(g);
        for (int v = 0; v < g.order(); ++v) {
            const int without = oracle::gamma(g.without_vertex(v));
            CHECK(a.minus.contains(v) == (without < gamma));
            CHECK(a.equal.contains(v) == (without == gamma));
        }
    }
}

TEST_CASE("private neighbours") {
    CHECK(private_neighbors(path(4), 0, VertexSet::of({0, 3})) == VertexSet::of({0, 1}));
    CHECK(private_neighbors(complete(3), 0, VertexSet::of({0, 1})).empty());
    CHECK(private_neighbors(cycle(5), 0, VertexSet::of({0})) == VertexSet::of({0, 1, 4}));
}

TEST_CASE("edge-addition criticality") {
    CHECK(is_cea(cycle(4)));
    CHECK_FALSE(is_cea(path(4)));
    CHECK(is_cea(complete(4)));
    CHECK(is_cea(edgeless(3)));
}

TEST_CASE("bound checks") {
    Graph cube = cartesian_product(cycle(4), path(2)).graph;
    auto cb = bound_checks(cube);
    REQUIRE(cb.size() == 2);
    CHECK(cb[0].name == "min-degree upper bound");
    CHECK(cb[0].applicable);
    CHECK(cb[0].pass);
    CHECK(cb[0].bound == "24/8");
    CHECK_FALSE(cb[1].applicable);

    auto kk = cartesian_product(complete(3), complete(3));
    auto kb = bound_checks(kk.graph, kk.index);
    CHECK(kb[0].applicable);
    CHECK(kb[0].pass);
    CHECK(kb[1].name == "cartesian product lower bound");
    CHECK(kb[1].applicable);
    CHECK(kb[1].bound == "3");
    CHECK(kb[1].pass);

    auto kc = cartesian_product(complete(5), cycle(5));
    auto kcb = bound_checks(kc.graph, kc.index);
    CHECK_FALSE(kcb[0].applicable);
    CHECK(kcb[1].applicable);
    CHECK(kcb[1].pass);
    CHECK(kcb[1].computed >= 5);

    CHECK_THROWS_AS(bound_checks(path(4), kk.index), std::invalid_argument);
}

TEST_CASE("parameter chain on random graphs") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.45);
        const int gamma = param_value(g, Param::gamma);
        const int i = param_value(g, Param::i);
        const int beta = param_value(g, Param::beta0);
        CHECK(gamma <= i);
        CHECK(i <= beta);
        CHECK(gamma <= param_value(g, Param::gamma_r));
        CHECK(gamma <= param_value(g, Param::gamma_oc));
        if (min_degree(g) > 0) {
            const int gt = param_value(g, Param::gamma_t);
            CHECK(gamma <= gt);
            CHECK(gt <= 2 * gamma);
            CHECK(gt <= param_value(g, Param::gamma_tr));
            CHECK(gt <= param_value(g, Param::gamma_t_oc));
        }
    }
}
