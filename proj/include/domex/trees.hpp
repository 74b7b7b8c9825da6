#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domex/canon.hpp"
#include "domex/graph.hpp"

namespace domex {

// A tree with a 0/1 vertex labelling; `ones` is the 1-class, the rest carry label 0.
struct LabeledTree {
    Graph tree;
    VertexSet ones;

    VertexSet zeros() const { return tree.vertices() - ones; }
    // (graph6, hex bitmask of the 0-class)
    std::pair<std::string, std::string> serialize() const;
};

inline constexpr int kMaxTreeEnumeration = 14;

// One representative per isomorphism class of trees of order n (1 <= n <= 14), sorted by tree_key.
std::vector<Graph> enumerate_trees(int n);

// corona1(u) with the added leaves labelled 0 and the vertices of u labelled 1. u is a tree of order >= 2.
LabeledTree labeled_corona(const Graph& u);

// Glues c onto t by identifying u (label 0 in t) with v (label 0 in c). The result's vertex 0 is
// the glued vertex and keeps label 0; the other labels carry over.
LabeledTree operation_o(const LabeledTree& t, const LabeledTree& c, int u, int v);

// Checks that c is a labelled 1-corona: order >= 4, leaves exactly the 0-class, supports the 1-class,
// and every 1-vertex has exactly one leaf.
bool is_labeled_corona(const LabeledTree& c);

// For a gamma-excellent tree of order >= 4, the labelling 0 = V-, 1 = V=. Absent otherwise.
// Throws std::logic_error if the labelling's 0-class is not a gamma-set.
std::optional<LabeledTree> script_t_check(const Graph& t);

// Predicted gamma-family of a gamma-excellent tree of order >= 4: {K1} when some cut-vertex lies in V-,
// otherwise the edgeless graphs of orders 1..n/2 (the tree is then a 1-corona).
std::vector<IsoKey> tree_family_prediction(const Graph& t);

// If t is the 1-corona of some tree, that tree (on the support vertices, relabelled).
std::optional<Graph> corona_base(const Graph& t);

}  // namespace domex
