#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "domex/canon.hpp"
#include "domex/construct.hpp"
#include "domex/trees.hpp"
#include "oracles.hpp"

using namespace domex;

TEST_CASE("canonical keys of small examples") {
    std::vector<int> perm = {0, 1, 2};
    std::set<IsoKey> keys;
    do {
        keys.insert(canonical_key(complete(3).permuted(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(keys.size() == 1);

    CHECK(canonical_key(path(3)) != canonical_key(complete(3)));
    CHECK(canonical_key(cycle(6)) != canonical_key(disjoint_union(complete(3), complete(3))));
    CHECK(are_isomorphic(cycle(4), complete_multipartite({2, 2})));
    CHECK_FALSE(are_isomorphic(path(6), cycle(6)));
    CHECK(canonical_key(Graph(0)).order == 0);
    CHECK_THROWS_AS(canonical_key(path(13)), std::invalid_argument);
}

TEST_CASE("keys order by order, edge count, then bytes") {
    const IsoKey a = canonical_key(edgeless(3));
    const IsoKey b = canonical_key(path(3));
    const IsoKey c = canonical_key(complete(2));
    CHECK(c < a);
    CHECK(a < b);
}

TEST_CASE("canonical labelling is a relabelling onto the canonical form") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 12, 0.4);
        const auto lab = canonical_labeling(g);
        CHECK(g.permuted(lab) == canonical_form(g));
    }
}

TEST_CASE("keys are invariant under 200 random relabellings") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 12;
        Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * ((trial % 5) / 4.0));
        Graph h = g.permuted(oracle::random_permutation(rng, n));
        CHECK(canonical_key(g) == canonical_key(h));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("keys separate exactly the isomorphism classes of random small graphs") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 6;
        Graph g = oracle::random_graph(rng, n);
        Graph h = oracle::random_graph(rng, n);
        if (g.edge_count() != h.edge_count()) h = g.permuted(oracle::random_permutation(rng, n));
        CHECK(are_isomorphic(g, h) == oracle::isomorphic(g, h));
    }
}

TEST_CASE("regular graphs with hard refinement still get distinct keys") {
    // Strongly regular-ish families where refinement alone cannot split cells.
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    Graph prism = cartesian_product(cycle(5), path(2)).graph;
    CHECK(is_regular(petersen, 3));
    CHECK(is_regular(prism, 3));
    CHECK_FALSE(are_isomorphic(petersen, prism));

    Graph k33 = complete_multipartite({3, 3});
    Graph prism3 = cartesian_product(cycle(3), path(2)).graph;
    CHECK_FALSE(are_isomorphic(k33, prism3));
    CHECK(are_isomorphic(cartesian_product(complete(3), complete(3)).graph,
                         complement(cartesian_product(complete(3), complete(3)).graph)));
}

TEST_CASE("induced copies") {
    CHECK(induced_copies(cycle(7), edgeless(3)).size() == oracle::induced_copies(cycle(7), edgeless(3)).size());
    CHECK(induced_copies(cycle(7), edgeless(3)).size() == 7);
    CHECK(induced_copies(complete(3), complete(2)).size() == 3);
    CHECK(induced_copies(path(4), complete(3)).empty());
    CHECK(induced_copies(path(3), path(4)).empty());
    CHECK_THROWS(induced_copies(complete(10), complete(9)));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + trial % 7;
        Graph g = oracle::random_graph(rng, n, 0.45);
        Graph h = oracle::random_graph(rng, 1 + trial % 4, 0.5);
        const auto want = oracle::induced_copies(g, h);
        CHECK(induced_copies(g, h) == want);
        CHECK(induced_copies_serial(g, h) == want);
    }
}

TEST_CASE("sparse subset visitor respects its limits") {
    std::mt19937_64 rng(17);
    Graph g = oracle::random_graph(rng, 9, 0.5);
    std::size_t visited = 0;
    std::size_t expected = 0;
    for (std::uint64_t m = 0; m < (1u << 9); ++m) {
        if (std::popcount(m) != 4) continue;
        Graph sub = oracle::induced(g, m);
        if (sub.edge_count() <= 2 && (sub.order() == 0 || max_degree(sub) <= 1)) ++expected;
    }
    for_each_sparse_subset(g, 4, 2, 1, [&](VertexSet s) {
        Graph sub = g.induced(s);
        CHECK(sub.edge_count() <= 2);
        CHECK(max_degree(sub) <= 1);
        ++visited;
    });
    CHECK(visited == expected);
}

TEST_CASE("tree keys") {
    Graph p4 = path(4);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) CHECK(tree_key(p4.permuted(oracle::random_permutation(rng, 4))) == tree_key(p4));
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(tree_key(star) != tree_key(p4));
    CHECK_THROWS(tree_key(cycle(4)));

    // Agreement with general canonical keys on random trees up to order 12.
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 12;
        Graph a = oracle::random_tree(rng, n);
        Graph b = oracle::random_tree(rng, n);
        CHECK((tree_key(a) == tree_key(b)) == (canonical_key(a) == canonical_key(b)));
    }
}

TEST_CASE("labelled tree keys distinguish the marking") {
    Graph p4 = path(4);
    CHECK(labeled_tree_key(p4, VertexSet::of({0})) == labeled_tree_key(p4, VertexSet::of({3})));
    CHECK(labeled_tree_key(p4, VertexSet::of({0})) != labeled_tree_key(p4, VertexSet::of({1})));
    CHECK(labeled_tree_key(p4, VertexSet()) == labeled_tree_key(p4.permuted({3, 2, 1, 0}), VertexSet()));
}
