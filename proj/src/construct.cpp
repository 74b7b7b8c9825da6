#include "domex/construct.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace domex {

namespace {

void require_order(int n, int minimum, const char* what) {
    if (n < minimum)
        throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(minimum) + " vertices");
    if (n > kMaxOrder) throw CapacityError(std::string(what) + " of order " + std::to_string(n) + " exceeds 64");
}

}  // namespace

Graph path(int n) {
    require_order(n, 1, "path");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    require_order(n, 3, "cycle");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    require_order(n, 1, "complete graph");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless(int n) {
    require_order(n, 1, "edgeless graph");
    return Graph(n);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete multipartite graph needs at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("parts must be non-empty");
        n += p;
    }
    require_order(n, 1, "complete multipartite graph");
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxOrder) throw CapacityError("disjoint union exceeds 64 vertices");
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph corona1(const Graph& g) {
    const int n = g.order();
    if (2 * n > kMaxOrder) throw CapacityError("1-corona exceeds 64 vertices");
    Graph out(2 * n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < n; ++v) out.add_edge(v, n + v);
    return out;
}

VertexSet ProductIndex::h_layer(int i) const {
    VertexSet s;
    for (int j = 0; j < cols; ++j) s.insert(at(i, j));
    return s;
}

VertexSet ProductIndex::g_layer(int j) const {
    VertexSet s;
    for (int i = 0; i < rows; ++i) s.insert(at(i, j));
    return s;
}

CartesianProduct cartesian_product(const Graph& g, const Graph& h) {
    const int rows = g.order();
    const int cols = h.order();
    if (rows * cols > kMaxOrder)
        throw CapacityError("cartesian product of orders " + std::to_string(rows) + " and " + std::to_string(cols) +
                            " exceeds 64 vertices");
    CartesianProduct out{Graph(rows * cols), ProductIndex{rows, cols}};
    const ProductIndex& ix = out.index;
    for (int i = 0; i < rows; ++i)
        for (auto [a, b] : h.edges()) out.graph.add_edge(ix.at(i, a), ix.at(i, b));
    for (int j = 0; j < cols; ++j)
        for (auto [a, b] : g.edges()) out.graph.add_edge(ix.at(a, j), ix.at(b, j));
    return out;
}

LexProduct generalized_lex_product(const Graph& g, const std::vector<Graph>& fibers) {
    if (static_cast<int>(fibers.size()) != g.order())
        throw std::invalid_argument("expected " + std::to_string(g.order()) + " fibers, got " +
                                    std::to_string(fibers.size()));
    int total = 0;
    for (const Graph& f : fibers) total += f.order();
    if (total > kMaxOrder) throw CapacityError("generalized lexicographic product exceeds 64 vertices");

    LexProduct out{Graph(total), {}};
    int offset = 0;
    for (const Graph& f : fibers) {
        out.fibers.push_back({offset, f.order()});
        for (auto [u, v] : f.edges()) out.graph.add_edge(offset + u, offset + v);
        offset += f.order();
    }
    for (auto [i, j] : g.edges())
        for (int x : out.fibers[i].set())
            for (int y : out.fibers[j].set()) out.graph.add_edge(x, y);
    return out;
}

Coalescence coalescence(const std::vector<std::pair<Graph, int>>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("coalescence needs at least two parts");
    int total = 1;
    for (const auto& [part, v] : parts) {
        if (part.order() < 2) throw std::invalid_argument("coalescence parts must have order at least 2");
        if (v < 0 || v >= part.order()) throw std::out_of_range("glue vertex out of range");
        total += part.order() - 1;
    }
    if (total > kMaxOrder) throw CapacityError("coalescence exceeds 64 vertices");

    Coalescence out{Graph(total), 0, {}};
    int next = 1;
    for (const auto& [part, glue] : parts) {
        std::vector<int> map(part.order());
        for (int v = 0; v < part.order(); ++v) map[v] = (v == glue) ? 0 : next++;
        for (auto [a, b] : part.edges()) out.graph.add_edge(map[a], map[b]);
        out.part_maps.push_back(std::move(map));
    }
    return out;
}

}  // namespace domex
