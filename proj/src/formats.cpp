#include "domex/formats.hpp"

#include <istream>
#include <sstream>

#include "domex/graph6.hpp"

namespace domex {

std::string to_adjacency_list(const Graph& g, int base) {
    std::string out = "Graph, order " + std::to_string(g.order()) + ".\n";
    for (int v = 0; v < g.order(); ++v) {
        out += std::to_string(v + base) + " :";
        for (int w : g.neighbors(v)) out += " " + std::to_string(w + base);
        out += ";\n";
    }
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ":";
    for (auto [a, b] : g.edges()) out += " " + std::to_string(a) + "-" + std::to_string(b);
    return out;
}

namespace {

struct Row {
    long vertex;
    std::vector<long> neighbors;
    std::size_t line;
};

Graph build(const std::vector<Row>& rows, int base) {
    const long n = static_cast<long>(rows.size());
    if (n > kMaxOrder) throw ParseError("block has more than 64 vertices", 0, rows.back().line);
    Graph g(static_cast<int>(n));
    for (long i = 0; i < n; ++i) {
        const Row& r = rows[i];
        if (r.vertex - base != i)
            throw ParseError("expected vertex " + std::to_string(i + base) + ", found " + std::to_string(r.vertex), 0,
                             r.line);
        for (long w : r.neighbors) {
            const long idx = w - base;
            if (idx < 0 || idx >= n) throw ParseError("neighbour " + std::to_string(w) + " out of range", 0, r.line);
            if (idx == i) throw ParseError("loop at vertex " + std::to_string(r.vertex), 0, r.line);
            g.add_edge(static_cast<int>(i), static_cast<int>(idx));
        }
    }
    return g;
}

}  // namespace

std::vector<Graph> parse_adjacency_lists(std::istream& in, int base) {
    std::vector<Graph> out;
    std::vector<Row> rows;
    auto flush = [&] {
        if (!rows.empty()) out.push_back(build(rows, base));
        rows.clear();
    };
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line.compare(first, 5, "Graph") == 0) {
            flush();
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("missing ':'", line.size(), line_no);
        Row row{0, {}, line_no};
        std::istringstream head(line.substr(0, colon));
        if (!(head >> row.vertex)) throw ParseError("missing vertex number", first, line_no);
        std::string rest = line.substr(colon + 1);
        for (char& c : rest)
            if (c == ';' || c == '.' || c == ',') c = ' ';
        std::istringstream tail(rest);
        std::string tok;
        while (tail >> tok) {
            try {
                std::size_t used = 0;
                row.neighbors.push_back(std::stol(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::logic_error&) {
                throw ParseError("bad neighbour '" + tok + "'", colon + 1, line_no);
            }
        }
        rows.push_back(std::move(row));
    }
    flush();
    return out;
}

}  // namespace domex
