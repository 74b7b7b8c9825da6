#include "domex/graph6.hpp"

namespace domex {

ParseError::ParseError(const std::string& what, std::size_t offset, std::size_t line)
    : std::runtime_error((line ? "line " + std::to_string(line) + ", " : std::string()) + "byte " +
                         std::to_string(offset) + ": " + what),
      reason_(what),
      offset_(offset),
      line_(line) {}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph from_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    if (text.empty()) throw ParseError("empty graph6 string", base);
    if (text.front() == ':') throw ParseError("sparse6 input is not supported", base);
    if (text.front() == '&') throw ParseError("digraph6 input is not supported", base);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", base + i);
    }

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') throw ParseError("order exceeds 64 vertices", base + 1);
        if (text.size() < 4) throw ParseError("truncated order field", base + text.size());
        n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
        pos = 4;
        if (n <= 62) throw ParseError("non-canonical long order field", base + 1);
    }
    if (n > kMaxOrder) throw ParseError("order " + std::to_string(n) + " exceeds 64 vertices", base);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw ParseError("expected " + std::to_string(expected) + " adjacency bytes, found " +
                             std::to_string(text.size() - pos),
                         base + std::min(text.size(), pos + expected));

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        int byte = text[pos + k / 6] - 63;
        if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("non-zero padding bits", base + pos + k / 6);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace domex
