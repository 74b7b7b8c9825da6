#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domex/canon.hpp"
#include "domex/domination.hpp"

namespace domex {

// Pairwise non-isomorphic graphs sorted by IsoKey; keys[i] belongs to graphs[i].
struct Catalog {
    std::string source;  // "all:n", "all-connected:n", "regular:n:k", "file:path", ...
    std::vector<Graph> graphs;
    std::vector<IsoKey> keys;
    std::vector<std::string> warnings;  // duplicate isomorphs found while loading

    std::size_t size() const { return graphs.size(); }
};

inline constexpr int kMaxAllGraphsOrder = 7;
inline constexpr int kMaxRegularOrder = 12;

// Sweep over all edge subsets whose degree sequence is non-increasing in vertex order (every class has
// such a labelling), deduplicated by canonical key. The parallel kernel splits the sweep into blocks.
Catalog generate_all_graphs(int n, bool connected_only);
Catalog generate_all_graphs_serial(int n, bool connected_only);

// Orderly generation: vertices are added one at a time and a partial graph survives only if its
// labelling maximises the column-major adjacency string, which makes the output isomorph-free
// without a global dedup table. Subtrees below a fixed depth are expanded in parallel.
Catalog generate_regular(int n, int k, bool connected_only);
Catalog generate_regular_serial(int n, int k, bool connected_only);

// True if no relabelling of g gives a larger column-major upper-triangle bit string.
bool is_max_labeling(const Graph& g);

// graph6 lines; blank lines and a ">>graph6<<" header are ignored. Isomorphic duplicates are
// dropped and reported in `warnings`.
Catalog parse_catalog(std::istream& in, const std::string& source);
Catalog load_catalog(const std::string& path);
// Writes the graph6 lines to `path` and a JSON metadata sidecar to `path + ".json"`.
void save_catalog(const Catalog& c, const std::string& path);
std::string catalog_metadata_json(const Catalog& c);

struct ParamConstraint {
    Param param = Param::gamma;
    int value = 0;
};

struct Query {
    std::vector<ParamConstraint> params;
    std::optional<Graph> pattern;  // require H-excellence for this H
    Param pattern_param = Param::gamma;
    std::optional<int> regular;
    std::optional<bool> connected;
    std::optional<Param> family;  // attach the excellent family as evidence
};

struct Match {
    std::size_t index = 0;
    std::vector<std::pair<Param, int>> values;
    std::vector<IsoKey> family;
};

// Entries satisfying every constraint, in catalog order. A parameter that is undefined on an
// entry counts as a failed constraint.
std::vector<Match> search(const Catalog& c, const Query& q);
std::vector<Match> search_serial(const Catalog& c, const Query& q);

}  // namespace domex
