#include "doctest.h"

#include <random>

#include "domex/construct.hpp"
#include "domex/graph.hpp"
#include "oracles.hpp"

using namespace domex;

TEST_CASE("vertex sets behave like bit sets") {
    VertexSet s = VertexSet::of({0, 2, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.front() == 0);
    CHECK(s.back() == 5);
    CHECK(s.to_string() == "{0,2,5}");
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
    CHECK((s - VertexSet::single(0)) == VertexSet::of({2, 5}));
    CHECK(VertexSet::of({2}).is_subset_of(s));
    CHECK(VertexSet::first(64).size() == 64);
    CHECK(VertexSet().empty());
    CHECK(VertexSet().to_string() == "{}");
}

TEST_CASE("graph construction and edge bookkeeping") {
    Graph g(4, {{0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    g.add_edge(2, 3);
    CHECK(g.degree(2) == 2);
    g.remove_edge(1, 2);
    CHECK_FALSE(g.has_edge(2, 1));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(65), CapacityError);
    CHECK_NOTHROW(Graph(64));
}

TEST_CASE("symmetry and irreflexivity hold on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 20;
        Graph g = oracle::random_graph(rng, n, 0.3);
        for (int u = 0; u < n; ++u) {
            CHECK_FALSE(g.neighbors(u).contains(u));
            CHECK(g.neighbors(u).is_subset_of(g.vertices()));
            for (int v : g.neighbors(u)) CHECK(g.has_edge(v, u));
        }
    }
}

TEST_CASE("induced subgraphs and vertex deletion relabel compactly") {
    Graph p = path(5);
    Graph mid = p.induced(VertexSet::of({1, 2, 4}));
    CHECK(mid.order() == 3);
    CHECK(mid.edges() == std::vector<std::pair<int, int>>{{0, 1}});

    Graph c = cycle(5).without_vertex(0);
    CHECK(c == path(4));

    Graph k = complete(3);
    CHECK(k.permuted({2, 0, 1}) == k);
}

TEST_CASE("basic queries") {
    auto c5 = basic_queries(cycle(5));
    CHECK(c5.connected);
    CHECK(c5.regular == 2);
    CHECK_FALSE(c5.tree);

    CHECK_FALSE(is_connected(disjoint_union(complete(1), complete(1))));
    Graph p4 = corona1(path(2));
    CHECK(is_tree(p4));
    CHECK(oracle::isomorphic(p4, path(4)));

    CHECK(degree_sequence(path(4)) == std::vector<int>{2, 2, 1, 1});
    CHECK(min_degree(path(4)) == 1);
    CHECK(max_degree(complete(5)) == 4);
    CHECK(cut_vertices(path(4)) == VertexSet::of({1, 2}));
    CHECK(leaves(path(4)) == VertexSet::of({0, 3}));
    CHECK(distances_from(path(4), 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(distances_from(disjoint_union(complete(1), complete(1)), 0) == std::vector<int>{0, -1});
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_tree(Graph(0)));
    CHECK(is_tree(Graph(1)));
}

TEST_CASE("standard constructors") {
    CHECK(path(1).order() == 1);
    CHECK(cycle(3) == complete(3));
    CHECK_THROWS(cycle(2));
    CHECK_THROWS(path(0));
    CHECK_THROWS(complete(0));
    CHECK_THROWS(edgeless(0));
    CHECK_THROWS(complete_multipartite({}));
    CHECK(oracle::isomorphic(complete_multipartite({2, 2}), cycle(4)));
    CHECK(complete_multipartite({1, 1, 1}) == complete(3));
    CHECK(corona1(complete(1)) == complete(2));
    Graph cor = corona1(path(3));
    CHECK(cor.order() == 6);
    CHECK(cor.has_edge(0, 3));
    CHECK(cor.has_edge(2, 5));
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 12);
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).edge_count() + g.edge_count() == g.order() * (g.order() - 1) / 2);
    }
}

TEST_CASE("cartesian products and layers") {
    auto sq = cartesian_product(path(2), path(2));
    CHECK(oracle::isomorphic(sq.graph, cycle(4)));

    auto kk = cartesian_product(complete(3), complete(3));
    CHECK(kk.graph.order() == 9);
    CHECK(is_regular(kk.graph, 4));

    auto prod = cartesian_product(path(3), cycle(4));
    CHECK(prod.index.at(2, 3) == 11);
    CHECK(prod.index.row_of(11) == 2);
    CHECK(prod.index.col_of(11) == 3);
    for (int i = 0; i < 3; ++i) CHECK(prod.graph.induced(prod.index.h_layer(i)) == cycle(4));
    for (int j = 0; j < 4; ++j) CHECK(prod.graph.induced(prod.index.g_layer(j)) == path(3));

    CHECK_THROWS_AS(cartesian_product(complete(9), complete(8)), CapacityError);
}

TEST_CASE("generalized lexicographic product") {
    auto same = generalized_lex_product(cycle(5), std::vector<Graph>(5, complete(1)));
    CHECK(same.graph == cycle(5));

    auto apart = generalized_lex_product(edgeless(2), {path(3), cycle(4)});
    CHECK(apart.graph == disjoint_union(path(3), cycle(4)));

    auto doubled = generalized_lex_product(cycle(5), std::vector<Graph>(5, complete(2)));
    CHECK(doubled.graph.order() == 10);
    CHECK(is_regular(doubled.graph, 5));
    CHECK(doubled.fibers[3].first == 6);
    CHECK(doubled.fibers[3].set() == VertexSet::of({6, 7}));

    auto mixed = generalized_lex_product(path(2), {complete(1), path(3)});
    CHECK(mixed.graph.degree(0) == 3);
    CHECK(mixed.graph.has_edge(1, 2));
    CHECK_FALSE(mixed.graph.has_edge(1, 3));

    CHECK_THROWS_AS(generalized_lex_product(path(3), {complete(1)}), std::invalid_argument);
}

TEST_CASE("coalescence") {
    auto p3 = coalescence({{path(2), 0}, {path(2), 0}});
    CHECK(oracle::isomorphic(p3.graph, path(3)));
    CHECK(p3.glued == 0);

    auto star = coalescence({{complete(2), 1}, {complete(2), 0}, {complete(2), 0}, {complete(2), 1}});
    CHECK(star.graph.order() == 5);
    CHECK(star.graph.degree(star.glued) == 4);

    auto cc = coalescence({{cycle(7), 3}, {cycle(7), 5}});
    CHECK(cc.graph.order() == 13);
    CHECK(cc.graph.degree(cc.glued) == 4);
    CHECK(cc.part_maps[0][3] == cc.glued);
    CHECK(cc.part_maps[1][5] == cc.glued);
    CHECK(oracle::gamma(cc.graph) == 5);

    CHECK_THROWS(coalescence({{path(2), 0}}));
    CHECK_THROWS(coalescence({{complete(1), 0}, {path(2), 0}}));
    CHECK_THROWS_AS(coalescence({{complete(40), 0}, {complete(30), 0}}), CapacityError);
}
