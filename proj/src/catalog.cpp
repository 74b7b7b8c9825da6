#include "domex/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "domex/excellence.hpp"
#include "domex/graph6.hpp"
#include "json.hpp"

namespace domex {

namespace {

using Rows = std::array<std::uint64_t, kMaxRegularOrder>;

Catalog finish_catalog(std::string source, std::map<IsoKey, Graph> by_key) {
    Catalog c;
    c.source = std::move(source);
    for (auto& [key, g] : by_key) {
        c.keys.push_back(key);
        c.graphs.push_back(std::move(g));
    }
    return c;
}

std::string all_source(int n, bool connected_only) {
    return (connected_only ? "all-connected:" : "all:") + std::to_string(n);
}

void check_all_order(int n) {
    if (n < 0 || n > kMaxAllGraphsOrder)
        throw std::invalid_argument("generate_all_graphs supports orders 0.." + std::to_string(kMaxAllGraphsOrder));
}

// Graph for `mask` over the pair list, or nothing when its degrees are not non-increasing.
std::optional<Graph> sweep_member(int n, const std::vector<std::pair<int, int>>& pairs, std::uint64_t mask,
                                  bool connected_only) {
    std::array<int, kMaxAllGraphsOrder> deg{};
    for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1U) {
            ++deg[pairs[e].first];
            ++deg[pairs[e].second];
        }
    for (int v = 1; v < n; ++v)
        if (deg[v] > deg[v - 1]) return std::nullopt;
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    if (connected_only && !is_connected(g)) return std::nullopt;
    return g;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

// Branch-and-bound over relabellings, position by position. Column p of the relabelled string only
// depends on the first p+1 positions, so any prefix that already compares smaller is cut.
class MaxLabelCheck {
public:
    MaxLabelCheck(const Rows& adj, int n) : adj_(adj), n_(n) {
        for (int j = 1; j < n; ++j) {
            std::uint32_t c = 0;
            for (int i = 0; i < j; ++i) c = (c << 1) | ((adj[i] >> j) & 1U);
            col_[j] = c;
        }
    }

    bool run() {
        std::array<std::uint32_t, kMaxRegularOrder> val{};
        return descend(0, (std::uint64_t{1} << n_) - 1, val);
    }

private:
    bool twins(int u, int v) const {
        std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        return (adj_[u] & ~pair) == (adj_[v] & ~pair);
    }

    bool descend(int p, std::uint64_t unused, const std::array<std::uint32_t, kMaxRegularOrder>& val) {
        if (p == n_) return true;
        std::uint64_t tried = 0;
        for (std::uint64_t rest = unused; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (val[w] > col_[p]) return false;
            if (val[w] < col_[p]) continue;
            bool redundant = false;
            for (std::uint64_t t = tried; t; t &= t - 1)
                if (twins(std::countr_zero(t), w)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried |= std::uint64_t{1} << w;
            std::array<std::uint32_t, kMaxRegularOrder> next{};
            const std::uint64_t left = unused & ~(std::uint64_t{1} << w);
            for (std::uint64_t r = left; r; r &= r - 1) {
                const int x = std::countr_zero(r);
                next[x] = (val[x] << 1) | ((adj_[w] >> x) & 1U);
            }
            if (!descend(p + 1, left, next)) return false;
        }
        return true;
    }

    const Rows& adj_;
    int n_;
    std::array<std::uint32_t, kMaxRegularOrder> col_{};
};

struct Partial {
    Rows adj{};
    std::array<int, kMaxRegularOrder> deg{};
    int placed = 0;
};

class RegularGenerator {
public:
    RegularGenerator(int n, int k) : n_(n), k_(k) {}

    template <class Emit>
    void expand(const Partial& s, int stop_at, Emit& emit) const {
        if (s.placed == stop_at) {
            emit(s);
            return;
        }
        const int r = s.placed;
        std::uint64_t saturated = 0;
        for (int i = 0; i < r; ++i)
            if (s.deg[i] == k_) saturated |= std::uint64_t{1} << i;
        const std::uint64_t limit = std::uint64_t{1} << r;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            if (mask & saturated) continue;
            if (std::popcount(mask) > k_) continue;
            Partial child = s;
            child.placed = r + 1;
            child.deg[r] = std::popcount(mask);
            for (std::uint64_t m = mask; m; m &= m - 1) {
                const int i = std::countr_zero(m);
                child.adj[i] |= std::uint64_t{1} << r;
                child.adj[r] |= std::uint64_t{1} << i;
                ++child.deg[i];
            }
            if (!feasible(child)) continue;
            if (!beats_swap(child)) continue;
            if (!MaxLabelCheck(child.adj, r + 1).run()) continue;
            expand(child, stop_at, emit);
        }
    }

private:
    bool feasible(const Partial& s) const {
        const int remaining = n_ - s.placed;
        int deficit = 0;
        for (int i = 0; i < s.placed; ++i) {
            const int d = k_ - s.deg[i];
            if (d > remaining) return false;
            deficit += d;
        }
        const int stubs = remaining * k_;
        if (deficit > stubs) return false;
        const int internal = stubs - deficit;
        return internal % 2 == 0 && internal <= remaining * (remaining - 1);
    }

    // Necessary condition from swapping the last two vertices.
    static bool beats_swap(const Partial& s) {
        const int r = s.placed - 1;
        if (r < 1) return true;
        std::uint32_t mine = 0;
        std::uint32_t swapped = 0;
        for (int i = 0; i < r - 1; ++i) {
            mine = (mine << 1) | ((s.adj[i] >> (r - 1)) & 1U);
            swapped = (swapped << 1) | ((s.adj[i] >> r) & 1U);
        }
        return swapped <= mine;
    }

    int n_;
    int k_;
};

void check_regular_args(int n, int k) {
    if (n < 1 || n > kMaxRegularOrder)
        throw std::invalid_argument("generate_regular supports orders 1.." + std::to_string(kMaxRegularOrder));
    if (k < 0 || k >= n) throw std::invalid_argument("degree must satisfy 0 <= k < n");
    if ((n * k) % 2 != 0)
        throw std::invalid_argument("no " + std::to_string(k) + "-regular graph of order " + std::to_string(n) +
                                    " exists (n*k must be even)");
}

Graph to_graph(const Partial& s, int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((s.adj[i] >> j) & 1U) g.add_edge(i, j);
    return g;
}

Catalog regular_catalog(int n, int k, bool connected_only, std::vector<Graph> found) {
    std::map<IsoKey, Graph> by_key;
    for (Graph& g : found) {
        if (connected_only && !is_connected(g)) continue;
        IsoKey key = canonical_key(g);
        if (!by_key.emplace(std::move(key), std::move(g)).second)
            throw std::logic_error("orderly generation produced an isomorphic duplicate");
    }
    return finish_catalog((connected_only ? "regular-connected:" : "regular:") + std::to_string(n) + ":" +
                              std::to_string(k),
                          std::move(by_key));
}

bool matches(const Graph& g, const Query& q, Match& m) {
    if (q.regular && !is_regular(g, *q.regular)) return false;
    if (q.connected && is_connected(g) != *q.connected) return false;
    try {
        for (const auto& c : q.params) {
            const int v = param_value(g, c.param);
            m.values.emplace_back(c.param, v);
            if (v != c.value) return false;
        }
        if (q.pattern) {
            const ParamResult sets = min_sets(g, q.pattern_param);
            m.values.emplace_back(q.pattern_param, sets.value);
            if (!check_h_excellent(g, *q.pattern, sets).excellent()) return false;
        }
        if (q.family) m.family = excellent_family(g, *q.family).keys();
    } catch (const UndefinedParameter&) {
        return false;
    }
    return true;
}

}  // namespace

Catalog generate_all_graphs_serial(int n, bool connected_only) {
    check_all_order(n);
    const auto pairs = all_pairs(n);
    std::map<IsoKey, Graph> by_key;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        auto g = sweep_member(n, pairs, mask, connected_only);
        if (!g) continue;
        IsoKey key = canonical_key(*g);
        if (!by_key.count(key)) by_key.emplace(std::move(key), canonical_form(*g));
    }
    return finish_catalog(all_source(n, connected_only), std::move(by_key));
}

Catalog generate_all_graphs(int n, bool connected_only) {
    check_all_order(n);
    const auto pairs = all_pairs(n);
    const std::int64_t total = std::int64_t{1} << pairs.size();
    constexpr std::int64_t kBlock = 4096;
    const std::int64_t blocks = (total + kBlock - 1) / kBlock;
    std::map<IsoKey, Graph> by_key;
#pragma omp parallel
    {
        std::map<IsoKey, Graph> local;
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const std::int64_t end = std::min(total, (b + 1) * kBlock);
            for (std::int64_t mask = b * kBlock; mask < end; ++mask) {
                auto g = sweep_member(n, pairs, static_cast<std::uint64_t>(mask), connected_only);
                if (!g) continue;
                IsoKey key = canonical_key(*g);
                if (!local.count(key)) local.emplace(std::move(key), canonical_form(*g));
            }
        }
#pragma omp critical(domex_all_graphs_merge)
        by_key.merge(local);
    }
    return finish_catalog(all_source(n, connected_only), std::move(by_key));
}

bool is_max_labeling(const Graph& g) {
    if (g.order() > kMaxRegularOrder) throw std::invalid_argument("is_max_labeling is limited to order 12");
    Rows adj{};
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).bits();
    return MaxLabelCheck(adj, g.order()).run();
}

Catalog generate_regular_serial(int n, int k, bool connected_only) {
    check_regular_args(n, k);
    RegularGenerator gen(n, k);
    std::vector<Graph> found;
    auto emit = [&](const Partial& s) { found.push_back(to_graph(s, n)); };
    gen.expand(Partial{}, n, emit);
    return regular_catalog(n, k, connected_only, std::move(found));
}

Catalog generate_regular(int n, int k, bool connected_only) {
    check_regular_args(n, k);
    RegularGenerator gen(n, k);
    const int split = std::min(n, 7);
    std::vector<Partial> frontier;
    auto keep = [&](const Partial& s) { frontier.push_back(s); };
    gen.expand(Partial{}, split, keep);

    std::vector<std::vector<Graph>> per_node(frontier.size());
    const int count = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        auto emit = [&](const Partial& s) { per_node[i].push_back(to_graph(s, n)); };
        gen.expand(frontier[i], n, emit);
    }
    std::vector<Graph> found;
    for (auto& part : per_node)
        for (auto& g : part) found.push_back(std::move(g));
    return regular_catalog(n, k, connected_only, std::move(found));
}

Catalog parse_catalog(std::istream& in, const std::string& source) {
    std::map<IsoKey, std::pair<Graph, std::size_t>> by_key;
    Catalog c;
    c.source = source;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        Graph g;
        try {
            g = from_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError(e.reason(), e.offset(), line_no);
        }
        if (g.order() > kMaxCanonOrder)
            throw ParseError("catalog graphs are limited to order " + std::to_string(kMaxCanonOrder), 0, line_no);
        IsoKey key = canonical_key(g);
        auto it = by_key.find(key);
        if (it != by_key.end()) {
            c.warnings.push_back("line " + std::to_string(line_no) + " is isomorphic to line " +
                                 std::to_string(it->second.second) + "; duplicate dropped");
            continue;
        }
        by_key.emplace(std::move(key), std::make_pair(std::move(g), line_no));
    }
    for (auto& [key, entry] : by_key) {
        c.keys.push_back(key);
        c.graphs.push_back(std::move(entry.first));
    }
    return c;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    return parse_catalog(in, "file:" + path);
}

std::string catalog_metadata_json(const Catalog& c) {
    nlohmann::json meta;
    meta["source"] = c.source;
    meta["count"] = c.size();
    std::map<int, std::size_t> orders;
    for (const Graph& g : c.graphs) ++orders[g.order()];
    nlohmann::json by_order = nlohmann::json::object();
    for (auto [n, count] : orders) by_order[std::to_string(n)] = count;
    meta["orders"] = by_order;
    meta["duplicate_warnings"] = c.warnings;
    return meta.dump(2);
}

void save_catalog(const Catalog& c, const std::string& path) {
    {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write catalog file " + path);
        for (const Graph& g : c.graphs) out << to_graph6(g) << '\n';
    }
    std::ofstream meta(path + ".json");
    if (!meta) throw std::runtime_error("cannot write catalog metadata " + path + ".json");
    meta << catalog_metadata_json(c) << '\n';
}

std::vector<Match> search_serial(const Catalog& c, const Query& q) {
    std::vector<Match> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Match m;
        m.index = i;
        if (matches(c.graphs[i], q, m)) out.push_back(std::move(m));
    }
    return out;
}

std::vector<Match> search(const Catalog& c, const Query& q) {
    const int count = static_cast<int>(c.size());
    std::vector<std::optional<Match>> slots(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        Match m;
        m.index = static_cast<std::size_t>(i);
        if (matches(c.graphs[i], q, m)) slots[i] = std::move(m);
    }
    std::vector<Match> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace domex
