#include "domex/domination.hpp"

#include <algorithm>
#include <array>

namespace domex {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"gamma",   "i",        "beta0",    "gamma_t",
                                                    "gamma_r", "gamma_oc", "gamma_tr", "gamma_t_oc"};

bool independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool dominating(const Graph& g, VertexSet s) { return g.closed_neighbors(s) == g.vertices(); }
bool total_dominating(const Graph& g, VertexSet s) { return g.open_neighbors(s) == g.vertices(); }

// Every vertex outside s has a neighbour outside s.
bool restrained(const Graph& g, VertexSet s) {
    VertexSet outside = g.vertices() - s;
    for (int v : outside)
        if (!g.neighbors(v).intersects(outside)) return false;
    return true;
}

bool outer_connected(const Graph& g, VertexSet s) { return is_connected(g, g.vertices() - s); }

bool uses_open_cover(Param p) { return is_total(p); }

// Exhaustive search for sets of exactly k vertices satisfying p. Branches on the uncovered vertex
// with fewest remaining options; branch j takes option j and forbids options before it, so every
// set is generated once.
class CoverSearch {
public:
    CoverSearch(const Graph& g, Param p, bool collect_all) : g_(g), p_(p), all_(collect_all) {
        open_ = uses_open_cover(p);
        for (int v = 0; v < g.order(); ++v) cover_[v] = open_ ? g.neighbors(v) : g.closed_neighbors(v);
    }

    // Returns the solutions of size k (one at most when not collecting all).
    std::vector<VertexSet> solve(int k) {
        k_ = k;
        found_.clear();
        branch(VertexSet(), VertexSet(), VertexSet());
        return found_;
    }

private:
    bool done() const { return !all_ && !found_.empty(); }

    void finish(VertexSet chosen, VertexSet rest, int need) {
        if (done()) return;
        if (need == 0) {
            if (satisfies(g_, chosen, p_)) found_.push_back(chosen);
            return;
        }
        if (rest.size() < need) return;
        int v = rest.front();
        VertexSet tail = rest - VertexSet::single(v);
        finish(chosen | VertexSet::single(v), tail, need - 1);
        finish(chosen, tail, need);
    }

    void branch(VertexSet chosen, VertexSet excluded, VertexSet covered) {
        if (done()) return;
        const VertexSet all = g_.vertices();
        const VertexSet uncovered = all - covered;
        const int remaining = k_ - chosen.size();
        if (uncovered.empty()) {
            finish(chosen, all - chosen - excluded, remaining);
            return;
        }
        if (remaining == 0) return;

        const VertexSet allowed = all - chosen - excluded;
        int best_gain = 0;
        for (int u : allowed) best_gain = std::max(best_gain, (cover_[u] & uncovered).size());
        if (best_gain == 0 || remaining * best_gain < uncovered.size()) return;

        int pivot = -1;
        int fewest = kMaxOrder + 1;
        for (int v : uncovered) {
            // u covers v exactly when v covers u, for both open and closed neighbourhoods
            int options = (cover_[v] & allowed).size();
            if (options < fewest) {
                fewest = options;
                pivot = v;
                if (options <= 1) break;
            }
        }
        if (fewest == 0) return;

        VertexSet banned = excluded;
        for (int u : cover_[pivot] & allowed) {
            branch(chosen | VertexSet::single(u), banned, covered | cover_[u]);
            banned.insert(u);
            if (done()) return;
        }
    }

    const Graph& g_;
    Param p_;
    bool all_;
    bool open_ = false;
    int k_ = 0;
    std::array<VertexSet, kMaxOrder> cover_{};
    std::vector<VertexSet> found_;
};

// Maximal independent sets via Bron-Kerbosch with pivoting on the complement.
class IndependentSearch {
public:
    enum class Mode { smallest_maximal, largest };

    IndependentSearch(const Graph& g, Mode mode) : g_(g), mode_(mode) {
        for (int v = 0; v < g.order(); ++v) non_adj_[v] = g.vertices() - g.closed_neighbors(v);
        best_ = mode == Mode::largest ? -1 : g.order() + 1;
    }

    ParamResult run() {
        expand(VertexSet(), g_.vertices(), VertexSet());
        std::sort(found_.begin(), found_.end());
        return {best_, found_};
    }

private:
    void record(VertexSet r) {
        const int size = r.size();
        bool better = mode_ == Mode::largest ? size > best_ : size < best_;
        if (better) {
            best_ = size;
            found_.clear();
        }
        if (size == best_) found_.push_back(r);
    }

    void expand(VertexSet r, VertexSet p, VertexSet x) {
        if (mode_ == Mode::largest) {
            if (r.size() + p.size() < best_) return;
        } else if (r.size() > best_ || (r.size() == best_ && !p.empty())) {
            return;
        }
        if (p.empty()) {
            if (x.empty()) record(r);
            return;
        }
        int pivot = -1;
        int most = -1;
        for (int u : p | x) {
            int c = (p & non_adj_[u]).size();
            if (c > most) {
                most = c;
                pivot = u;
            }
        }
        for (int v : p - non_adj_[pivot]) {
            expand(r | VertexSet::single(v), p & non_adj_[v], x & non_adj_[v]);
            p.erase(v);
            x.insert(v);
        }
    }

    const Graph& g_;
    Mode mode_;
    std::array<VertexSet, kMaxOrder> non_adj_{};
    int best_;
    std::vector<VertexSet> found_;
};

void check_defined(const Graph& g, Param p) {
    if (g.order() == 0) throw UndefinedParameter(std::string(param_name(p)) + " is undefined on the null graph");
    if (is_total(p))
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0)
                throw UndefinedParameter("parameter undefined: " + std::string(param_name(p)) +
                                         " needs a graph without isolated vertices (vertex " + std::to_string(v) +
                                         " is isolated)");
}

int cover_lower_bound(const Graph& g, Param p) {
    switch (p) {
        case Param::gamma_r:
        case Param::gamma_oc:
            return param_value(g, Param::gamma);
        case Param::gamma_tr:
        case Param::gamma_t_oc:
            return param_value(g, Param::gamma_t);
        default: {
            const int reach = max_degree(g) + 1;
            return std::max(1, (g.order() + reach - 1) / reach);
        }
    }
}

ParamResult cover_solve(const Graph& g, Param p, bool collect_all) {
    CoverSearch search(g, p, collect_all);
    for (int k = cover_lower_bound(g, p); k <= g.order(); ++k) {
        auto sets = search.solve(k);
        if (!sets.empty()) {
            std::sort(sets.begin(), sets.end());
            return {k, std::move(sets)};
        }
    }
    throw std::logic_error("no feasible set found for " + std::string(param_name(p)));
}

}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Param> parse_param(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<Param>(i);
    return std::nullopt;
}

bool is_maximized(Param p) { return p == Param::beta0; }

bool is_total(Param p) { return p == Param::gamma_t || p == Param::gamma_tr || p == Param::gamma_t_oc; }

bool satisfies(const Graph& g, VertexSet s, Param p) {
    switch (p) {
        case Param::gamma:
            return dominating(g, s);
        case Param::i:
            return independent(g, s) && dominating(g, s);
        case Param::beta0:
            return independent(g, s);
        case Param::gamma_t:
            return total_dominating(g, s);
        case Param::gamma_r:
            return dominating(g, s) && restrained(g, s);
        case Param::gamma_oc:
            return dominating(g, s) && outer_connected(g, s);
        case Param::gamma_tr:
            return total_dominating(g, s) && restrained(g, s);
        case Param::gamma_t_oc:
            return total_dominating(g, s) && outer_connected(g, s);
    }
    return false;
}

int param_value(const Graph& g, Param p) {
    check_defined(g, p);
    if (p == Param::i || p == Param::beta0) return min_sets(g, p).value;
    return cover_solve(g, p, false).value;
}

ParamResult min_sets(const Graph& g, Param p) {
    check_defined(g, p);
    if (p == Param::i) return IndependentSearch(g, IndependentSearch::Mode::smallest_maximal).run();
    if (p == Param::beta0) return IndependentSearch(g, IndependentSearch::Mode::largest).run();
    return cover_solve(g, p, true);
}

VertexSplit v_minus_equal_serial(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("V-/V= needs at least two vertices");
    const int base = param_value(g, Param::gamma);
    VertexSplit split;
    for (int x = 0; x < g.order(); ++x) {
        const int without = param_value(g.without_vertex(x), Param::gamma);
        if (without < base) split.minus.insert(x);
        if (without == base) split.equal.insert(x);
    }
    return split;
}

VertexSplit v_minus_equal(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("V-/V= needs at least two vertices");
    const int base = param_value(g, Param::gamma);
    const int n = g.order();
    std::vector<int> without(n, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int x = 0; x < n; ++x) without[x] = param_value(g.without_vertex(x), Param::gamma);
    VertexSplit split;
    for (int x = 0; x < n; ++x) {
        if (without[x] < base) split.minus.insert(x);
        if (without[x] == base) split.equal.insert(x);
    }
    return split;
}

VertexSet private_neighbors(const Graph& g, int x, VertexSet X) {
    if (x < 0 || x >= g.order() || !X.contains(x))
        throw std::invalid_argument("private_neighbors: vertex " + std::to_string(x) + " is not in X");
    const VertexSet only = VertexSet::single(x);
    VertexSet out;
    for (int y = 0; y < g.order(); ++y)
        if ((g.closed_neighbors(y) & X) == only) out.insert(y);
    return out;
}

bool is_cea(const Graph& g) {
    if (g.order() == 0) return true;
    const int base = param_value(g, Param::gamma);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            Graph plus = g;
            plus.add_edge(u, v);
            if (param_value(plus, Param::gamma) == base) return false;
        }
    }
    return true;
}

std::vector<BoundCheck> bound_checks(const Graph& g, const std::optional<ProductIndex>& product) {
    std::vector<BoundCheck> out;
    const int gamma = g.order() == 0 ? 0 : param_value(g, Param::gamma);
    const int n = g.order();

    BoundCheck degree_bound{"min-degree upper bound", false, "", gamma, true, ""};
    const int delta = min_degree(g);
    if (delta >= 3 && delta <= 5) {
        degree_bound.applicable = true;
        const int num = n * delta;
        const int den = 3 * delta - 1;
        degree_bound.bound = std::to_string(num) + "/" + std::to_string(den);
        degree_bound.pass = gamma * den <= num;
    } else {
        degree_bound.note = "minimum degree " + std::to_string(delta) + " outside {3,4,5}";
    }
    out.push_back(degree_bound);

    BoundCheck product_bound{"cartesian product lower bound", false, "", gamma, true, ""};
    if (product) {
        if (product->rows * product->cols != n) throw std::invalid_argument("product index does not match graph order");
        product_bound.applicable = true;
        const int bound = std::min(product->rows, product->cols);
        product_bound.bound = std::to_string(bound);
        product_bound.pass = gamma >= bound;
    } else {
        product_bound.note = "graph not built as a cartesian product";
    }
    out.push_back(product_bound);
    return out;
}

}  // namespace domex
