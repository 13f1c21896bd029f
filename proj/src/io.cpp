#include "chordcycle/io.hpp"

#include <sstream>

namespace chordcycle {

namespace {
constexpr int kG6Offset = 63;
constexpr int kG6MaxShort = 62;
}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw ParseError("graph6 long form (n >= 63) not supported", 0);
    if (header < kG6Offset || header > kG6Offset + kG6MaxShort)
        throw ParseError("bad graph6 header byte", 0);
    const int n = header - kG6Offset;
    if (n < 1) throw ParseError("graph6 order 0 rejected (graphs have n >= 1)", 0);
    const int bits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((bits + 5) / 6);
    if (text.size() - 1 < need) throw ParseError("truncated graph6 bit field", text.size());
    if (text.size() - 1 > need) throw ParseError("trailing bytes after graph6 data", 1 + need);

    GraphBuilder b(n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const size_t byte_index = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(text[byte_index]);
            if (c < kG6Offset || c > kG6Offset + 63)
                throw ParseError("graph6 data byte out of range", byte_index);
            const int group = c - kG6Offset;
            if ((group >> (5 - bit % 6)) & 1) b.add_edge(row, col);
        }
    }
    // Padding bits must be zero per the format; tolerate nonzero quietly is a
    // footgun for round-trips, so check.
    for (int pad = bits; pad < static_cast<int>(need) * 6; ++pad) {
        const size_t byte_index = 1 + pad / 6;
        const int group = static_cast<unsigned char>(text[byte_index]) - kG6Offset;
        if ((group >> (5 - pad % 6)) & 1)
            throw ParseError("nonzero padding bits in graph6 data", byte_index);
    }
    return b.build();
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kG6MaxShort)
        throw std::invalid_argument("graph6 short form supports n < 63, got n = " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + kG6Offset));
    const int bits = n * (n - 1) / 2;
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Offset));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Offset));
    (void)bits;
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1) throw ParseError("expected vertex count on first line", lineno);
            std::string rest;
            if (ls >> rest) throw ParseError("unexpected tokens after vertex count", lineno);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError("edge line needs two endpoints", lineno);
        std::string rest;
        if (ls >> rest) throw ParseError("unexpected tokens after edge", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw ParseError("bad edge endpoints", lineno);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("empty edge-list input", 0);
    return Graph::from_edge_list(n, edges);
}

std::string write_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace chordcycle
