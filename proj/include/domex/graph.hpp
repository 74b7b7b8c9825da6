#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domex/vertex_set.hpp"

namespace domex {

inline constexpr int kMaxOrder = 64;

// Raised when an operation would exceed the 64-vertex capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Simple undirected graph on at most 64 vertices, one adjacency word per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first(n_); }

    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | (std::uint64_t{1} << v)); }
    // N[S]
    VertexSet closed_neighbors(VertexSet s) const;
    // N(S), the union of open neighborhoods
    VertexSet open_neighbors(VertexSet s) const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by `s`, relabelled 0..|s|-1 in increasing vertex order.
    Graph induced(VertexSet s) const;
    // G - v, relabelled so that vertices above v shift down by one.
    Graph without_vertex(int v) const;
    // Relabelled copy: vertex v of this graph becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> adj_{};
};

// Connectivity of the subgraph induced by `within`; the empty set counts as connected.
bool is_connected(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
// Sorted in non-increasing order.
std::vector<int> degree_sequence(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
// k when every vertex has degree k; empty for irregular graphs. The null graph counts as 0-regular.
std::optional<int> regular_degree(const Graph& g);
bool is_regular(const Graph& g, int k);
bool is_tree(const Graph& g);
// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Graph& g);
// Vertices of degree one.
VertexSet leaves(const Graph& g);
// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

struct BasicInfo {
    int order = 0;
    int edges = 0;
    bool connected = true;
    std::vector<int> degree_sequence;
    std::optional<int> regular;
    bool tree = false;
    int min_degree = 0;
    int max_degree = 0;
};

BasicInfo basic_queries(const Graph& g);

}  // namespace domex
