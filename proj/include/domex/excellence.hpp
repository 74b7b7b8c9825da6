#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "domex/canon.hpp"
#include "domex/domination.hpp"

namespace domex {

// True when every vertex lies in some optimal set.
bool is_excellent(const Graph& g, const ParamResult& sets);
bool is_excellent(const Graph& g, Param p);

// Outcome of the two conditions for a single pattern H, reported separately.
struct HExcellence {
    bool condition_i = false;   // every vertex sits in a copy of H inside some optimal set
    bool condition_ii = false;  // every induced copy of H sits inside some optimal set
    VertexSet uncovered;        // vertices failing condition (i)
    std::optional<VertexSet> stray_copy;  // a copy failing condition (ii)
    std::size_t copies = 0;

    bool excellent() const { return condition_i && condition_ii; }
};

HExcellence check_h_excellent(const Graph& g, const Graph& h, const ParamResult& sets);
HExcellence check_h_excellent(const Graph& g, const Graph& h, Param p);
bool is_H_excellent(const Graph& g, const Graph& h, Param p);
// Family version: both conditions quantify over every member of `family`.
bool is_H_excellent(const Graph& g, const std::vector<Graph>& family, Param p);

struct Witness {
    int vertex = 0;
    VertexSet copy;
    VertexSet mu_set;
};

struct FamilyMember {
    IsoKey key;
    Graph representative;  // canonical form
    std::size_t copies = 0;
    std::vector<Witness> witnesses;  // one per vertex of g
};

struct FamilyResult {
    Param param = Param::gamma;
    int value = 0;
    bool excellent = false;
    std::size_t mu_sets = 0;
    std::vector<FamilyMember> members;  // ascending by IsoKey

    std::vector<IsoKey> keys() const;
};

// G<mu>: all H for which g is H-mu-excellent. Candidates are the induced subgraphs of the
// optimal sets; orders above mu are impossible. Condition (ii) runs in parallel per candidate.
FamilyResult excellent_family(const Graph& g, Param p);
// Works only from (g, optimal-set collection): identical collections give identical families.
FamilyResult family_from_sets(const Graph& g, Param p, const ParamResult& sets);
FamilyResult family_from_sets_serial(const Graph& g, Param p, const ParamResult& sets);

}  // namespace domex
