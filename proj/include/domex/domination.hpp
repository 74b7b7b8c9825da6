#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domex/construct.hpp"
#include "domex/graph.hpp"

namespace domex {

// The eight parameters. beta0 is maximised, everything else minimised.
enum class Param { gamma, i, beta0, gamma_t, gamma_r, gamma_oc, gamma_tr, gamma_t_oc };

inline constexpr std::array<Param, 8> kAllParams = {Param::gamma,    Param::i,        Param::beta0,
                                                    Param::gamma_t,  Param::gamma_r,  Param::gamma_oc,
                                                    Param::gamma_tr, Param::gamma_t_oc};

std::string_view param_name(Param p);
std::optional<Param> parse_param(std::string_view name);
bool is_maximized(Param p);
// Total-type parameters are undefined on graphs with an isolated vertex.
bool is_total(Param p);

class UndefinedParameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Value plus every optimal set, deduplicated and ascending by bit value.
struct ParamResult {
    int value = 0;
    std::vector<VertexSet> sets;
};

bool satisfies(const Graph& g, VertexSet s, Param p);

int param_value(const Graph& g, Param p);
ParamResult min_sets(const Graph& g, Param p);

struct VertexSplit {
    VertexSet minus;  // gamma(G - x) < gamma(G)
    VertexSet equal;  // gamma(G - x) = gamma(G)
};

// The parallel kernel solves the n vertex-deleted subgraphs concurrently.
VertexSplit v_minus_equal(const Graph& g);
VertexSplit v_minus_equal_serial(const Graph& g);

// pn[x, X] = {y : N[y] & X = {x}}
VertexSet private_neighbors(const Graph& g, int x, VertexSet X);

// Every single non-edge addition changes gamma. Complete graphs qualify vacuously.
bool is_cea(const Graph& g);

struct BoundCheck {
    std::string name;
    bool applicable = false;
    std::string bound;  // human-readable bound value
    int computed = 0;
    bool pass = true;
    std::string note;
};

// gamma <= n*delta/(3*delta-1) for delta in {3,4,5}; gamma(G box H) >= min(|G|,|H|) when
// `product` describes how g was built.
std::vector<BoundCheck> bound_checks(const Graph& g, const std::optional<ProductIndex>& product = std::nullopt);

}  // namespace domex
