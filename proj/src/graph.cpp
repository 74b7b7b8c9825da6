#include "domex/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace domex {

std::string VertexSet::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : *this) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

Graph::Graph(int order) : n_(order) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    if (order > kMaxOrder) throw CapacityError("graph order " + std::to_string(order) + " exceeds 64");
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

VertexSet Graph::closed_neighbors(VertexSet s) const {
    VertexSet out = s;
    for (int v : s) out |= VertexSet(adj_[v]);
    return out;
}

VertexSet Graph::open_neighbors(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= VertexSet(adj_[v]);
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u]))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet s) const {
    std::array<int, kMaxOrder> index{};
    int k = 0;
    for (int v : s) index[v] = k++;
    Graph h(k);
    for (int v : s)
        for (int w : VertexSet(adj_[v]) & s) h.adj_[index[v]] |= std::uint64_t{1} << index[w];
    return h;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    return induced(vertices() - VertexSet::single(v));
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    Graph h(n_);
    for (int v = 0; v < n_; ++v)
        for (int w : VertexSet(adj_[v])) h.adj_[perm[v]] |= std::uint64_t{1} << perm[w];
    return h;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

bool is_connected(const Graph& g, VertexSet within) {
    if (within.empty()) return true;
    VertexSet seen = VertexSet::single(within.front());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = g.open_neighbors(frontier) & within;
        frontier = next - seen;
        seen |= next;
    }
    return seen == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> seq(g.order());
    for (int v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

int min_degree(const Graph& g) {
    int best = g.order() == 0 ? 0 : g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

bool is_regular(const Graph& g, int k) {
    auto d = regular_degree(g);
    return d && *d == k;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

namespace {

int count_components(const Graph& g, VertexSet within) {
    int count = 0;
    while (!within.empty()) {
        VertexSet seen = VertexSet::single(within.front());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next = g.open_neighbors(frontier) & within;
            frontier = next - seen;
            seen |= next;
        }
        within -= seen;
        ++count;
    }
    return count;
}

}  // namespace

VertexSet cut_vertices(const Graph& g) {
    VertexSet out;
    const int base = count_components(g, g.vertices());
    for (int v = 0; v < g.order(); ++v) {
        VertexSet rest = g.vertices() - VertexSet::single(v);
        if (count_components(g, rest) > base) out.insert(v);
    }
    return out;
}

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.insert(v);
    return out;
}

std::vector<int> distances_from(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    int d = 0;
    while (!frontier.empty()) {
        for (int v : frontier) dist[v] = d;
        VertexSet next = g.open_neighbors(frontier) - seen;
        seen |= next;
        frontier = next;
        ++d;
    }
    return dist;
}

BasicInfo basic_queries(const Graph& g) {
    BasicInfo info;
    info.order = g.order();
    info.edges = g.edge_count();
    info.connected = is_connected(g);
    info.degree_sequence = degree_sequence(g);
    info.regular = regular_degree(g);
    info.tree = is_tree(g);
    info.min_degree = min_degree(g);
    info.max_degree = max_degree(g);
    return info;
}

}  // namespace domex
