#include "domex/canon.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "domex/graph6.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace domex {

namespace {

// Column-major upper triangle, first bit most significant. 66 bits at order 12.
using Bits = unsigned __int128;
using Cells = std::vector<std::vector<int>>;

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2) {}

    std::vector<int> run() {
        Cells start;
        if (n_ > 0) {
            start.emplace_back();
            for (int v = 0; v < n_; ++v) start.back().push_back(v);
        }
        explore(std::move(start));
        std::vector<int> position(n_);
        for (int i = 0; i < n_; ++i) position[best_order_[i]] = i;
        return position;
    }

private:
    // Splits cells by neighbour counts into every current cell until stable. Fragments are ordered
    // by ascending signature, which keeps the result independent of input labels.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::array<int, kMaxOrder> cell_of{};
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
            Cells next;
            next.reserve(n_);
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(cells.size(), 0);
                    for (int w : g_.neighbors(v)) ++sig[cell_of[w]];
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                std::size_t begin = 0;
                for (std::size_t i = 1; i <= keyed.size(); ++i) {
                    if (i == keyed.size() || keyed[i].first != keyed[begin].first) {
                        std::vector<int> part;
                        for (std::size_t j = begin; j < i; ++j) part.push_back(keyed[j].second);
                        next.push_back(std::move(part));
                        begin = i;
                    }
                }
                if (keyed.front().first != keyed.back().first) changed = true;
            }
            cells = std::move(next);
        }
    }

    Bits prefix_bits(const std::vector<int>& order, int count) const {
        Bits bits = 0;
        for (int j = 1; j < count; ++j)
            for (int i = 0; i < j; ++i) bits = (bits << 1) | (g_.has_edge(order[i], order[j]) ? 1 : 0);
        return bits;
    }

    bool twins(int u, int v) const {
        VertexSet pair = VertexSet::single(u) | VertexSet::single(v);
        return (g_.neighbors(u) - pair) == (g_.neighbors(v) - pair);
    }

    void explore(Cells cells) {
        refine(cells);

        int fixed = 0;
        std::vector<int> order;
        for (const auto& cell : cells) {
            if (cell.size() != 1) break;
            order.push_back(cell[0]);
            ++fixed;
        }
        if (have_best_ && fixed > 1) {
            const int len = fixed * (fixed - 1) / 2;
            Bits mine = prefix_bits(order, fixed);
            Bits theirs = best_ >> (total_bits_ - len);
            if (mine > theirs) return;
        }
        if (fixed == static_cast<int>(cells.size())) {
            Bits bits = prefix_bits(order, n_);
            if (!have_best_ || bits < best_) {
                best_ = bits;
                best_order_ = order;
                have_best_ = true;
            }
            return;
        }

        const std::size_t target = fixed;
        const std::vector<int> members = cells[target];
        std::vector<int> tried;
        for (int v : members) {
            bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); });
            if (redundant) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + target);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : members)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + target + 1, cells.end());
            explore(std::move(child));
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_;
    bool have_best_ = false;
    Bits best_ = 0;
    std::vector<int> best_order_;
};

void check_canon_order(const Graph& g) {
    if (g.order() > kMaxCanonOrder)
        throw std::invalid_argument("canonical keys are limited to order " + std::to_string(kMaxCanonOrder) +
                                    ", got " + std::to_string(g.order()));
}

struct PatternInfo {
    int order;
    int edges;
    int max_degree;
    std::vector<int> degrees;
    IsoKey key;
};

PatternInfo describe_pattern(const Graph& pattern) {
    if (pattern.order() > kMaxPatternOrder)
        throw std::invalid_argument("induced_copies patterns are limited to order " +
                                    std::to_string(kMaxPatternOrder));
    return {pattern.order(), pattern.edge_count(), max_degree(pattern), degree_sequence(pattern),
            canonical_key(pattern)};
}

template <class Visit>
void sparse_subsets_from(const Graph& g, int k, int max_edges, int max_deg, int start, VertexSet chosen, int size,
                         int edges, std::array<int, kMaxOrder>& deg, Visit& visit) {
    if (size == k) {
        visit(chosen);
        return;
    }
    const int last = g.order() - (k - size);
    for (int v = start; v <= last; ++v) {
        VertexSet hits = g.neighbors(v) & chosen;
        int added = hits.size();
        if (edges + added > max_edges || added > max_deg) continue;
        bool ok = true;
        for (int u : hits)
            if (deg[u] + 1 > max_deg) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int u : hits) ++deg[u];
        deg[v] = added;
        VertexSet next = chosen;
        next.insert(v);
        sparse_subsets_from(g, k, max_edges, max_deg, v + 1, next, size + 1, edges + added, deg, visit);
        for (int u : hits) --deg[u];
        deg[v] = 0;
    }
}

bool matches_pattern(const Graph& g, VertexSet s, const PatternInfo& info) {
    Graph sub = g.induced(s);
    if (sub.edge_count() != info.edges) return false;
    if (degree_sequence(sub) != info.degrees) return false;
    return canonical_key(sub) == info.key;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    check_canon_order(g);
    return CanonSearch(g).run();
}

Graph canonical_form(const Graph& g) { return g.permuted(canonical_labeling(g)); }

IsoKey canonical_key(const Graph& g) {
    Graph canon = canonical_form(g);
    return {canon.order(), canon.edge_count(), to_graph6(canon)};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return canonical_key(g) == canonical_key(h);
}

void for_each_sparse_subset(const Graph& g, int k, int max_edges, int max_degree,
                            const std::function<void(VertexSet)>& visit) {
    if (k < 0 || k > g.order()) return;
    std::array<int, kMaxOrder> deg{};
    auto call = [&](VertexSet s) { visit(s); };
    sparse_subsets_from(g, k, max_edges, max_degree, 0, VertexSet(), 0, 0, deg, call);
}

std::vector<VertexSet> induced_copies_serial(const Graph& g, const Graph& pattern) {
    const PatternInfo info = describe_pattern(pattern);
    std::vector<VertexSet> out;
    if (info.order > g.order()) return out;
    std::array<int, kMaxOrder> deg{};
    auto collect = [&](VertexSet s) {
        if (matches_pattern(g, s, info)) out.push_back(s);
    };
    sparse_subsets_from(g, info.order, info.edges, info.max_degree, 0, VertexSet(), 0, 0, deg, collect);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> induced_copies(const Graph& g, const Graph& pattern) {
    const PatternInfo info = describe_pattern(pattern);
    std::vector<VertexSet> out;
    if (info.order > g.order()) return out;
    if (info.order == 0) return {VertexSet()};

    const int first_last = g.order() - info.order;
    std::vector<std::vector<VertexSet>> per_root(first_last + 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int root = 0; root <= first_last; ++root) {
        std::array<int, kMaxOrder> deg{};
        auto collect = [&](VertexSet s) {
            if (matches_pattern(g, s, info)) per_root[root].push_back(s);
        };
        sparse_subsets_from(g, info.order, info.edges, info.max_degree, root + 1, VertexSet::single(root), 1, 0,
                            deg, collect);
    }
    for (auto& part : per_root) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string rooted_code(const Graph& t, int v, int parent, VertexSet marked) {
    std::vector<std::string> children;
    for (int w : t.neighbors(v))
        if (w != parent) children.push_back(rooted_code(t, w, v, marked));
    std::sort(children.begin(), children.end());
    std::string code = marked.contains(v) ? "(*" : "(";
    for (const auto& c : children) code += c;
    code += ')';
    return code;
}

std::vector<int> tree_centers(const Graph& t) {
    VertexSet remaining = t.vertices();
    while (remaining.size() > 2) {
        VertexSet strip;
        for (int v : remaining)
            if ((t.neighbors(v) & remaining).size() <= 1) strip.insert(v);
        remaining -= strip;
    }
    return remaining.to_vector();
}

}  // namespace

std::string labeled_tree_key(const Graph& t, VertexSet marked) {
    if (!is_tree(t)) throw std::invalid_argument("tree_key requires a tree");
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(t, c, -1, marked);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::string tree_key(const Graph& t) { return labeled_tree_key(t, VertexSet()); }

}  // namespace domex
