#pragma once

#include <utility>
#include <vector>

#include "domex/graph.hpp"

namespace domex {

// Standard families. Path and cycle vertices are numbered 0..n-1 along the path or cycle.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph complete_multipartite(const std::vector<int>& parts);

// Vertices of g keep their labels; vertex v of h becomes g.order() + v.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
// 1-corona: leaf n + v is attached to every vertex v.
Graph corona1(const Graph& g);

// Vertex (i, j) of a product with `cols` columns sits at index i * cols + j.
struct ProductIndex {
    int rows = 0;
    int cols = 0;

    int at(int i, int j) const { return i * cols + j; }
    int row_of(int v) const { return v / cols; }
    int col_of(int v) const { return v % cols; }
    // H-layer of row i: {(i, j) : j}
    VertexSet h_layer(int i) const;
    // G-layer of column j: {(i, j) : i}
    VertexSet g_layer(int j) const;
};

struct CartesianProduct {
    Graph graph;
    ProductIndex index;
};

// (u1,v1) ~ (u2,v2) iff u1 = u2 and v1v2 in E(h), or v1 = v2 and u1u2 in E(g).
CartesianProduct cartesian_product(const Graph& g, const Graph& h);

struct FiberRange {
    int first = 0;
    int size = 0;

    VertexSet set() const { return VertexSet(VertexSet::first(first + size).bits() & ~VertexSet::first(first).bits()); }
};

struct LexProduct {
    Graph graph;
    std::vector<FiberRange> fibers;
};

// G[Phi]: fiber i occupies a consecutive index block; vertices of distinct fibers i, j are
// adjacent iff ij is an edge of g.
LexProduct generalized_lex_product(const Graph& g, const std::vector<Graph>& fibers);

struct Coalescence {
    Graph graph;
    int glued = 0;
    // part_maps[i][v] is the index of vertex v of part i in the coalescence.
    std::vector<std::vector<int>> part_maps;
};

// Identifies the chosen vertex of every part into vertex 0; the remaining vertices of part i
// follow in block order.
Coalescence coalescence(const std::vector<std::pair<Graph, int>>& parts);

}  // namespace domex
