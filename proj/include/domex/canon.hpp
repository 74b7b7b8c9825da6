#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "domex/graph.hpp"

namespace domex {

inline constexpr int kMaxCanonOrder = 12;
inline constexpr int kMaxPatternOrder = 8;

// Isomorphism-class identity of a small graph. `graph6` encodes the canonical representative,
// so equal keys mean isomorphic graphs. Ordered by (order, edges, graph6 bytes).
struct IsoKey {
    int order = 0;
    int edges = 0;
    std::string graph6;

    auto operator<=>(const IsoKey&) const = default;
    bool operator==(const IsoKey&) const = default;
};

// Canonical relabelling: vertex v of g goes to position result[v]. Order at most 12.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
IsoKey canonical_key(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

// Every S subset of V(g) with g[S] isomorphic to `pattern`, ascending by bit value.
// The pattern has order at most 8. The parallel kernel splits on the smallest chosen vertex.
std::vector<VertexSet> induced_copies(const Graph& g, const Graph& pattern);
std::vector<VertexSet> induced_copies_serial(const Graph& g, const Graph& pattern);

// Visits every k-subset S of V(g) whose induced subgraph has at most `max_edges` edges and
// maximum degree at most `max_degree`. Both limits are monotone, so whole branches are cut.
void for_each_sparse_subset(const Graph& g, int k, int max_edges, int max_degree,
                            const std::function<void(VertexSet)>& visit);

// Center-rooted AHU string; equal keys exactly for isomorphic trees. No order cap.
std::string tree_key(const Graph& t);
// Same, with `marked` vertices distinguished (isomorphism of vertex-labelled trees).
std::string labeled_tree_key(const Graph& t, VertexSet marked);

}  // namespace domex

template <>
struct std::hash<domex::IsoKey> {
    std::size_t operator()(const domex::IsoKey& k) const noexcept { return std::hash<std::string>{}(k.graph6); }
};
