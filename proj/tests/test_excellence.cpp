#include "doctest.h"

#include <chrono>
#include <random>
#include <set>

#include "domex/construct.hpp"
#include "domex/excellence.hpp"
#include "domex/graph6.hpp"
#include "oracles.hpp"

using namespace domex;

namespace {

std::vector<IsoKey> keys_of(std::initializer_list<Graph> gs) {
    std::vector<IsoKey> out;
    for (const Graph& g : gs) out.push_back(canonical_key(g));
    std::sort(out.begin(), out.end());
    return out;
}

// Every induced subgraph of every optimal set, checked against the definition.
std::vector<IsoKey> oracle_family(const Graph& g, const ParamResult& sets) {
    std::set<IsoKey> candidates;
    for (VertexSet d : sets.sets) {
        const std::uint64_t bits = d.bits();
        for (std::uint64_t sub = bits; sub; sub = (sub - 1) & bits) candidates.insert(canonical_key(g.induced(VertexSet(sub))));
    }
    std::vector<IsoKey> out;
    for (const IsoKey& k : candidates) {
        Graph h = from_graph6(k.graph6);
        if (oracle::h_excellent(g, h, sets)) out.push_back(k);
    }
    return out;
}

}  // namespace

TEST_CASE("plain excellence") {
    CHECK(is_excellent(cycle(6), Param::gamma));
    CHECK_FALSE(is_excellent(path(3), Param::gamma));
    CHECK(is_excellent(path(7), Param::gamma));
    CHECK(is_excellent(path(2), Param::gamma));
    CHECK(is_excellent(complete(4), Param::gamma_t));
}

TEST_CASE("single-pattern excellence") {
    const Graph k33 = cartesian_product(complete(3), complete(3)).graph;
    CHECK_FALSE(is_H_excellent(k33, path(3), Param::gamma));
    CHECK(is_H_excellent(k33, complete(3), Param::gamma));
    CHECK(is_H_excellent(cycle(7), complete(2), Param::gamma));
    CHECK_FALSE(is_H_excellent(cycle(7), path(3), Param::gamma));

    const HExcellence c6 = check_h_excellent(cycle(6), complete(2), Param::gamma);
    CHECK_FALSE(c6.condition_i);
    CHECK(c6.copies == 6);
    CHECK(c6.stray_copy.has_value());
    CHECK(c6.uncovered == cycle(6).vertices());
}

TEST_CASE("K1-excellence is plain excellence") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.35);
        CHECK(is_H_excellent(g, complete(1), Param::gamma) == is_excellent(g, Param::gamma));
    }
}

TEST_CASE("pattern excellence agrees with the definition") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng, 3 + trial % 7, 0.4);
        Graph h = oracle::random_graph(rng, 1 + trial % 3, 0.5);
        for (Param p : {Param::gamma, Param::i, Param::beta0}) {
            const ParamResult sets = min_sets(g, p);
            CHECK(check_h_excellent(g, h, sets).excellent() == oracle::h_excellent(g, h, sets));
        }
    }
}

TEST_CASE("families of known graphs") {
    CHECK(excellent_family(cycle(5), Param::gamma).keys() == keys_of({complete(1), edgeless(2)}));
    CHECK(excellent_family(cycle(7), Param::gamma).keys() ==
          keys_of({complete(1), complete(2), edgeless(2), edgeless(3)}));
    CHECK(excellent_family(cycle(4), Param::gamma).keys() == keys_of({complete(1), complete(2), edgeless(2)}));
    CHECK(min_sets(cycle(4), Param::gamma).sets.size() == 6);
    CHECK(excellent_family(path(7), Param::gamma).keys() == keys_of({complete(1)}));
    CHECK(excellent_family(path(4), Param::gamma).keys() == keys_of({complete(1), edgeless(2)}));

    const Graph k33 = cartesian_product(complete(3), complete(3)).graph;
    CHECK(excellent_family(k33, Param::gamma).keys() ==
          keys_of({complete(1), complete(2), edgeless(2), disjoint_union(complete(1), complete(2)), edgeless(3),
                   complete(3)}));

    const Graph k44 = cartesian_product(complete(4), complete(4)).graph;
    const FamilyResult f44 = excellent_family(k44, Param::gamma);
    CHECK(f44.value == 4);
    CHECK(f44.members.size() == 10);
}

TEST_CASE("families agree with the definition on random graphs") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 4 + trial % 6, 0.3 + 0.1 * (trial % 4));
        const ParamResult sets = min_sets(g, Param::gamma);
        const FamilyResult f = family_from_sets(g, Param::gamma, sets);
        if (!is_excellent(g, sets)) {
            CHECK(f.members.empty());
            continue;
        }
        CHECK(f.keys() == oracle_family(g, sets));
    }
}

TEST_CASE("family witnesses are genuine") {
    const FamilyResult f = excellent_family(cycle(7), Param::gamma);
    CHECK(f.mu_sets == 14);
    for (const FamilyMember& m : f.members) {
        CHECK(m.witnesses.size() == 7);
        for (const Witness& w : m.witnesses) {
            CHECK(w.copy.contains(w.vertex));
            CHECK(w.copy.is_subset_of(w.mu_set));
            CHECK(are_isomorphic(cycle(7).induced(w.copy), m.representative));
        }
    }
}

TEST_CASE("pattern sets decompose into single patterns") {
    std::mt19937_64 rng(66);
    const std::vector<Graph> patterns = {complete(1), complete(2), edgeless(2), path(3), edgeless(3)};
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(rng, 5 + trial % 5, 0.35);
        for (std::size_t a = 0; a < patterns.size(); ++a)
            for (std::size_t b = a + 1; b < patterns.size(); ++b) {
                const bool both = is_H_excellent(g, patterns[a], Param::gamma) &&
                                  is_H_excellent(g, patterns[b], Param::gamma);
                CHECK(is_H_excellent(g, std::vector<Graph>{patterns[a], patterns[b]}, Param::gamma) == both);
            }
    }
}

TEST_CASE("observations on families") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 4 + trial % 6, 0.4);
        const FamilyResult f = excellent_family(g, Param::gamma);
        if (!f.excellent) continue;
        CHECK(f.members.front().key == canonical_key(complete(1)));
        for (const FamilyMember& m : f.members) CHECK(m.key.order <= f.value);
    }

    // Identical set collections under different labels give identical members.
    const Graph c6 = cycle(6);
    const ParamResult g_sets = min_sets(c6, Param::gamma);
    const ParamResult i_sets = min_sets(c6, Param::i);
    REQUIRE(g_sets.sets == i_sets.sets);
    CHECK(family_from_sets(c6, Param::gamma, g_sets).keys() == family_from_sets(c6, Param::i, i_sets).keys());
}

TEST_CASE("non-excellent graphs have empty families") {
    const FamilyResult f = excellent_family(path(3), Param::gamma);
    CHECK_FALSE(f.excellent);
    CHECK(f.members.empty());
    CHECK(f.value == 1);
}

TEST_CASE("serial and parallel families coincide") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_graph(rng, 6 + trial % 6, 0.3);
        const ParamResult sets = min_sets(g, Param::gamma);
        const FamilyResult a = family_from_sets(g, Param::gamma, sets);
        const FamilyResult b = family_from_sets_serial(g, Param::gamma, sets);
        CHECK(a.keys() == b.keys());
        CHECK(a.excellent == b.excellent);
        for (std::size_t k = 0; k < a.members.size() && k < b.members.size(); ++k) {
            CHECK(a.members[k].copies == b.members[k].copies);
            CHECK(a.members[k].witnesses.size() == b.members[k].witnesses.size());
        }
    }
}

TEST_CASE("unions of cycles") {
    const std::vector<std::vector<int>> unions = {{3, 3}, {4, 5}, {7, 7}, {3, 4, 5}, {5, 6, 7}, {10, 9}, {7, 7, 7}};
    for (const auto& parts : unions) {
        Graph g = cycle(parts[0]);
        for (std::size_t k = 1; k < parts.size(); ++k) g = disjoint_union(g, cycle(parts[k]));
        CHECK(is_excellent(g, Param::gamma));
    }
    const auto start = std::chrono::steady_clock::now();
    const FamilyResult f = excellent_family(disjoint_union(disjoint_union(cycle(7), cycle(7)), cycle(7)), Param::gamma);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(f.value == 9);
    CHECK(f.excellent);
    CHECK(seconds < 60.0);
}
