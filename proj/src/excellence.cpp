#include "domex/excellence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "domex/graph6.hpp"

namespace domex {

namespace {

VertexSet covered_vertices(const ParamResult& sets) {
    VertexSet all;
    for (VertexSet s : sets.sets) all |= s;
    return all;
}

std::optional<VertexSet> containing_set(const ParamResult& sets, VertexSet s) {
    for (VertexSet d : sets.sets)
        if (s.is_subset_of(d)) return d;
    return std::nullopt;
}

// All k-subsets of `from`.
template <class Visit>
void subsets_of(VertexSet from, int k, VertexSet acc, Visit& visit) {
    if (k == 0) {
        visit(acc);
        return;
    }
    if (from.size() < k) return;
    int v = from.front();
    VertexSet rest = from - VertexSet::single(v);
    subsets_of(rest, k - 1, acc | VertexSet::single(v), visit);
    subsets_of(rest, k, acc, visit);
}

struct Candidate {
    IsoKey key;
    Graph representative;
    std::vector<VertexSet> good;  // ascending
    std::size_t copies = 0;
};

std::size_t count_copies(const Graph& g, const Graph& pattern, const IsoKey& key) {
    const auto degrees = degree_sequence(pattern);
    const int edges = pattern.edge_count();
    std::size_t count = 0;
    for_each_sparse_subset(g, pattern.order(), edges, max_degree(pattern), [&](VertexSet s) {
        Graph sub = g.induced(s);
        if (sub.edge_count() == edges && degree_sequence(sub) == degrees && canonical_key(sub) == key) ++count;
    });
    return count;
}

std::vector<Candidate> collect_candidates(const Graph& g, const ParamResult& sets) {
    std::vector<Candidate> out;
    if (sets.value > kMaxCanonOrder)
        throw std::invalid_argument("excellent families are limited to parameter values up to " +
                                    std::to_string(kMaxCanonOrder));
    const VertexSet all = g.vertices();
    std::unordered_map<std::string, IsoKey> memo;
    for (int k = 1; k <= sets.value; ++k) {
        std::unordered_map<std::uint64_t, bool> seen;
        std::vector<VertexSet> good;
        for (VertexSet d : sets.sets) {
            auto add = [&](VertexSet s) {
                if (seen.emplace(s.bits(), true).second) good.push_back(s);
            };
            subsets_of(d, k, VertexSet(), add);
        }
        std::sort(good.begin(), good.end());

        std::map<IsoKey, Candidate> by_key;
        for (VertexSet s : good) {
            Graph sub = g.induced(s);
            std::string label = to_graph6(sub);
            auto it = memo.find(label);
            if (it == memo.end()) it = memo.emplace(label, canonical_key(sub)).first;
            auto [slot, fresh] = by_key.try_emplace(it->second);
            if (fresh) {
                slot->second.key = it->second;
                slot->second.representative = canonical_form(sub);
            }
            slot->second.good.push_back(s);
        }
        for (auto& [key, cand] : by_key) {
            VertexSet reach;
            for (VertexSet s : cand.good) reach |= s;
            if (reach == all) out.push_back(std::move(cand));
        }
    }
    return out;
}

FamilyResult assemble(const Graph& g, Param p, const ParamResult& sets, std::vector<Candidate>& cands) {
    FamilyResult result;
    result.param = p;
    result.value = sets.value;
    result.excellent = true;
    result.mu_sets = sets.sets.size();
    for (auto& cand : cands) {
        if (cand.copies != cand.good.size()) continue;
        FamilyMember member{cand.key, cand.representative, cand.copies, {}};
        for (int x = 0; x < g.order(); ++x) {
            auto it = std::find_if(cand.good.begin(), cand.good.end(), [x](VertexSet s) { return s.contains(x); });
            member.witnesses.push_back({x, *it, *containing_set(sets, *it)});
        }
        result.members.push_back(std::move(member));
    }
    std::sort(result.members.begin(), result.members.end(),
              [](const FamilyMember& a, const FamilyMember& b) { return a.key < b.key; });
    return result;
}

FamilyResult not_excellent(Param p, const ParamResult& sets) {
    FamilyResult result;
    result.param = p;
    result.value = sets.value;
    result.excellent = false;
    result.mu_sets = sets.sets.size();
    return result;
}

}  // namespace

bool is_excellent(const Graph& g, const ParamResult& sets) { return covered_vertices(sets) == g.vertices(); }

bool is_excellent(const Graph& g, Param p) { return is_excellent(g, min_sets(g, p)); }

HExcellence check_h_excellent(const Graph& g, const Graph& h, const ParamResult& sets) {
    if (h.order() < 1) throw std::invalid_argument("pattern must have at least one vertex");
    HExcellence out;
    VertexSet reach;
    for_each_sparse_subset(g, h.order(), h.edge_count(), max_degree(h), [&](VertexSet s) {
        if (!are_isomorphic(g.induced(s), h)) return;
        ++out.copies;
        if (containing_set(sets, s))
            reach |= s;
        else if (!out.stray_copy)
            out.stray_copy = s;
    });
    out.uncovered = g.vertices() - reach;
    out.condition_i = out.uncovered.empty();
    out.condition_ii = !out.stray_copy.has_value();
    return out;
}

HExcellence check_h_excellent(const Graph& g, const Graph& h, Param p) {
    return check_h_excellent(g, h, min_sets(g, p));
}

bool is_H_excellent(const Graph& g, const Graph& h, Param p) { return check_h_excellent(g, h, p).excellent(); }

bool is_H_excellent(const Graph& g, const std::vector<Graph>& family, Param p) {
    if (family.empty()) throw std::invalid_argument("pattern family must be non-empty");
    const ParamResult sets = min_sets(g, p);
    return std::all_of(family.begin(), family.end(),
                       [&](const Graph& h) { return check_h_excellent(g, h, sets).excellent(); });
}

std::vector<IsoKey> FamilyResult::keys() const {
    std::vector<IsoKey> out;
    for (const auto& m : members) out.push_back(m.key);
    return out;
}

FamilyResult family_from_sets_serial(const Graph& g, Param p, const ParamResult& sets) {
    if (!is_excellent(g, sets)) return not_excellent(p, sets);
    auto cands = collect_candidates(g, sets);
    for (auto& cand : cands) cand.copies = count_copies(g, cand.representative, cand.key);
    return assemble(g, p, sets, cands);
}

FamilyResult family_from_sets(const Graph& g, Param p, const ParamResult& sets) {
    if (!is_excellent(g, sets)) return not_excellent(p, sets);
    auto cands = collect_candidates(g, sets);
    const int count = static_cast<int>(cands.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int c = 0; c < count; ++c) cands[c].copies = count_copies(g, cands[c].representative, cands[c].key);
    return assemble(g, p, sets, cands);
}

FamilyResult excellent_family(const Graph& g, Param p) { return family_from_sets(g, p, min_sets(g, p)); }

}  // namespace domex
