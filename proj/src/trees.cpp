#include "domex/trees.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

#include "domex/construct.hpp"
#include "domex/domination.hpp"
#include "domex/excellence.hpp"
#include "domex/graph6.hpp"

namespace domex {

std::pair<std::string, std::string> LabeledTree::serialize() const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%llx", static_cast<unsigned long long>(zeros().bits()));
    return {to_graph6(tree), hex};
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > kMaxTreeEnumeration)
        throw std::invalid_argument("tree enumeration supports orders 1.." + std::to_string(kMaxTreeEnumeration));
    std::map<std::string, Graph> level;
    Graph single(1);
    level.emplace(tree_key(single), single);
    for (int order = 2; order <= n; ++order) {
        std::map<std::string, Graph> next;
        for (const auto& [key, t] : level) {
            for (int v = 0; v < t.order(); ++v) {
                Graph grown(order, t.edges());
                grown.add_edge(v, order - 1);
                std::string k = tree_key(grown);
                next.try_emplace(std::move(k), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [key, t] : level) out.push_back(std::move(t));
    return out;
}

LabeledTree labeled_corona(const Graph& u) {
    if (!is_tree(u)) throw std::invalid_argument("labeled_corona needs a tree");
    if (u.order() < 2) throw std::invalid_argument("labelled 1-corona trees have order at least four");
    return {corona1(u), VertexSet::first(u.order())};
}

bool is_labeled_corona(const LabeledTree& c) {
    const Graph& t = c.tree;
    if (t.order() < 4 || !is_tree(t)) return false;
    const VertexSet leafs = leaves(t);
    if (leafs != c.zeros()) return false;
    for (int s : c.ones)
        if ((t.neighbors(s) & leafs).size() != 1) return false;
    return leafs.size() * 2 == t.order();
}

LabeledTree operation_o(const LabeledTree& t, const LabeledTree& c, int u, int v) {
    if (!is_tree(t.tree)) throw std::invalid_argument("operation O: first operand is not a tree");
    if (!is_labeled_corona(c)) throw std::invalid_argument("operation O: second operand is not a labelled 1-corona tree");
    if (u < 0 || u >= t.tree.order() || !t.zeros().contains(u))
        throw std::invalid_argument("operation O clause (a): u must carry label 0 in the first tree");
    if (v < 0 || v >= c.tree.order() || !c.zeros().contains(v))
        throw std::invalid_argument("operation O clause (a): v must carry label 0 in the corona");

    Coalescence glued = coalescence({{t.tree, u}, {c.tree, v}});
    LabeledTree out{std::move(glued.graph), VertexSet()};
    for (int x : t.ones) out.ones.insert(glued.part_maps[0][x]);
    for (int x : c.ones) out.ones.insert(glued.part_maps[1][x]);
    if (out.ones.contains(glued.glued))
        throw std::logic_error("operation O clause (b): the glued vertex must keep label 0");
    return out;
}

std::optional<LabeledTree> script_t_check(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("script_t_check needs a tree");
    if (t.order() < 4) throw std::invalid_argument("script_t_check needs order at least four");
    const ParamResult sets = min_sets(t, Param::gamma);
    if (!is_excellent(t, sets)) return std::nullopt;

    const VertexSplit split = v_minus_equal(t);
    LabeledTree labeled{t, split.equal};
    const VertexSet zeros = labeled.zeros();
    if (zeros != split.minus)
        throw std::logic_error("gamma-excellent tree " + to_graph6(t) + ": V- and V= do not partition the vertices");
    if (zeros.size() != sets.value || !satisfies(t, zeros, Param::gamma))
        throw std::logic_error("gamma-excellent tree " + to_graph6(t) + ": V- is not a gamma-set");
    if (!leaves(t).is_subset_of(zeros))
        throw std::logic_error("gamma-excellent tree " + to_graph6(t) + ": a leaf lies outside V-");
    return labeled;
}

std::optional<Graph> corona_base(const Graph& t) {
    const int n = t.order();
    if (n == 2 && t.edge_count() == 1) return Graph(1);
    if (n < 4 || n % 2 != 0) return std::nullopt;
    const VertexSet leafs = leaves(t);
    if (leafs.size() * 2 != n) return std::nullopt;
    const VertexSet supports = t.vertices() - leafs;
    for (int s : supports)
        if ((t.neighbors(s) & leafs).size() != 1) return std::nullopt;
    return t.induced(supports);
}

std::vector<IsoKey> tree_family_prediction(const Graph& t) {
    if (!is_tree(t) || t.order() < 4) throw std::invalid_argument("tree_family_prediction needs a tree of order >= 4");
    if (!is_excellent(t, Param::gamma)) throw std::invalid_argument("tree_family_prediction needs a gamma-excellent tree");

    const VertexSplit split = v_minus_equal(t);
    if (split.minus.intersects(cut_vertices(t))) return {canonical_key(complete(1))};

    if (!corona_base(t)) throw std::logic_error("tree " + to_graph6(t) + " has no cut-vertex in V- but is not a 1-corona");
    std::vector<IsoKey> out;
    for (int r = 1; r <= t.order() / 2; ++r) out.push_back(canonical_key(edgeless(r)));
    return out;
}

}  // namespace domex
