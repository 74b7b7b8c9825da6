#include "domex/report.hpp"

#include "domex/canon.hpp"
#include "domex/graph6.hpp"

namespace domex::report {

std::string tool_version() {
#ifdef DOMEX_VERSION
    return DOMEX_VERSION;
#else
    return "unknown";
#endif
}

Json envelope(const std::string& input, Json results) {
    Json out;
    out["tool_version"] = tool_version();
    out["input"] = input;
    out["results"] = results.is_null() ? Json::array() : std::move(results);
    return out;
}

Json identity(std::size_t index, const Graph& g) {
    Json out;
    out["index"] = index;
    out["graph6"] = to_graph6(g);
    if (g.order() <= kMaxCanonOrder)
        out["canonical"] = canonical_key(g).graph6;
    else
        out["canonical"] = nullptr;
    return out;
}

Json vertex_set(VertexSet s) {
    Json out = Json::array();
    for (int v : s) out.push_back(v);
    return out;
}

Json analyze(std::size_t index, const Graph& g, const std::vector<Param>& params) {
    Json out = identity(index, g);
    out["order"] = g.order();
    out["edges"] = g.edge_count();
    if (g.order() > 0) {
        out["min_degree"] = min_degree(g);
        out["max_degree"] = max_degree(g);
    } else {
        out["min_degree"] = nullptr;
        out["max_degree"] = nullptr;
    }
    out["connected"] = is_connected(g);

    Json values = Json::array();
    for (Param p : params) {
        Json entry;
        entry["param"] = std::string(param_name(p));
        try {
            ParamResult r = min_sets(g, p);
            entry["value"] = r.value;
            entry["mu_sets"] = r.sets.size();
            entry["excellent"] = is_excellent(g, r);
        } catch (const UndefinedParameter&) {
            entry["error"] = "parameter undefined";
        }
        values.push_back(std::move(entry));
    }
    out["params"] = std::move(values);
    return out;
}

Json family(std::size_t index, const Graph& g, const FamilyResult& f) {
    Json out = identity(index, g);
    out["param"] = std::string(param_name(f.param));
    out["value"] = f.value;
    out["mu_sets"] = f.mu_sets;
    out["excellent"] = f.excellent;
    Json members = Json::array();
    for (const FamilyMember& m : f.members) {
        Json entry;
        entry["canonical"] = m.key.graph6;
        entry["order"] = m.key.order;
        entry["edges"] = m.key.edges;
        entry["copies"] = m.copies;
        Json witnesses = Json::array();
        for (const Witness& w : m.witnesses) {
            Json wj;
            wj["vertex"] = w.vertex;
            wj["copy"] = vertex_set(w.copy);
            wj["mu_set"] = vertex_set(w.mu_set);
            witnesses.push_back(std::move(wj));
        }
        entry["witnesses"] = std::move(witnesses);
        members.push_back(std::move(entry));
    }
    out["members"] = std::move(members);
    return out;
}

Json match(const Catalog& c, const Match& m) {
    Json out = identity(m.index, c.graphs[m.index]);
    Json values = Json::object();
    for (const auto& [p, v] : m.values) values[std::string(param_name(p))] = v;
    out["values"] = std::move(values);
    if (!m.family.empty()) {
        Json fam = Json::array();
        for (const IsoKey& k : m.family) fam.push_back(k.graph6);
        out["family"] = std::move(fam);
    }
    return out;
}

Json parse_failure(std::size_t index, const std::string& line, const std::string& message) {
    Json out;
    out["index"] = index;
    out["graph6"] = line;
    out["canonical"] = nullptr;
    out["error"] = message;
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace domex::report
