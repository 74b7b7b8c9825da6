#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domex/graph.hpp"

namespace domex {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line = 0);

    // Byte offset within the offending line.
    std::size_t offset() const { return offset_; }
    // 1-based line number when parsing a file, 0 otherwise.
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
    std::size_t offset_;
    std::size_t line_;
};

// Decodes one graph6 line. A leading ">>graph6<<" header and trailing CR/LF are accepted.
Graph from_graph6(std::string_view text);

// Encodes `g` in graph6; orders 63 and 64 use the four-byte size form.
std::string to_graph6(const Graph& g);

}  // namespace domex
