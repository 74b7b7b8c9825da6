#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "domex/catalog.hpp"
#include "domex/domination.hpp"
#include "domex/excellence.hpp"
#include "domex/graph.hpp"

namespace domex::report {

using Json = nlohmann::ordered_json;

std::string tool_version();

// {tool_version, input, results}
Json envelope(const std::string& input, Json results);

// {index, graph6, canonical}; canonical is null above the canonical-labelling order limit.
Json identity(std::size_t index, const Graph& g);

Json vertex_set(VertexSet s);

// Structural summary plus, per parameter, value, optimal-set count and excellence flag.
// An undefined parameter becomes {param, error: "parameter undefined"}.
Json analyze(std::size_t index, const Graph& g, const std::vector<Param>& params);

Json family(std::size_t index, const Graph& g, const FamilyResult& f);

Json match(const Catalog& c, const Match& m);

// One entry per input line that failed to parse.
Json parse_failure(std::size_t index, const std::string& line, const std::string& message);

// Dumps with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace domex::report
