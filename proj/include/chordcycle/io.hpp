#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chordcycle/graph.hpp"

namespace chordcycle {

// Parse failure for the text codecs; offset is the byte (graph6) or line
// (edge list) where decoding stopped making sense.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// graph6 short form (n < 63): header byte n+63, then the upper triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte,
// each offset by 63. A single trailing newline is tolerated.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge-list text: first line "n", then one "u v" line per edge.
Graph parse_edge_list_text(std::string_view text);
std::string write_edge_list_text(const Graph& g);

}  // namespace chordcycle
