#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "turan/graph.hpp"

namespace turan {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// ---------------------------------------------------------------------------
// Edge-list format: line 1 is "n m", then m lines "u v", 0-based, LF.
// ---------------------------------------------------------------------------

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw ParseError("edge list: unexpected end of input, line", lineno + 1);
        ++lineno;
    };
    next_line();
    long long n, m;
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header, line", lineno);
    }
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        next_line();
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v)) throw ParseError("edge list: bad edge line, line", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex index out of range, line", lineno);
        if (u == v) throw ParseError("edge list: loop edge, line", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// graph6: printable-ASCII encoding of the upper adjacency triangle, column by
// column (bit (i,j), i<j, ordered by j then i), 6 bits per byte offset by 63.
// Optional ">>graph6<<" header accepted; sparse6/digraph6 rejected.
// ---------------------------------------------------------------------------

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("write_graph6: order too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph read_graph6(const std::string& text) {
    std::size_t pos = 0;
    const std::string header = ">>graph6<<";
    if (text.compare(0, header.size(), header) == 0) pos = header.size();
    if (pos >= text.size()) throw ParseError("graph6: empty input, byte", pos);
    if (text[pos] == ':' || text[pos] == ';') throw ParseError("graph6: sparse6 input rejected, byte", pos);
    if (text[pos] == '&') throw ParseError("graph6: digraph6 input rejected, byte", pos);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: truncated input, byte", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range, byte", i);
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw ParseError("graph6: 8-byte order form unsupported, byte", pos);
        n = (static_cast<long long>(byte_at(pos + 1)) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
        pos += 4;
    } else {
        n = byte_at(pos);
        ++pos;
    }

    EdgeList edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = byte_at(pos++);
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    // Trailing newline/whitespace tolerated, anything else is an error.
    for (std::size_t i = pos; i < text.size(); ++i)
        if (text[i] != '\n' && text[i] != '\r' && text[i] != ' ')
            throw ParseError("graph6: trailing bytes, byte", i);
    return build_graph(static_cast<int>(n), edges);
}

enum class GraphFormat { EdgeList, Graph6 };

inline std::string write_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

inline Graph read_graph(const std::string& text, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? read_edge_list(text) : read_graph6(text);
}

/// Reads a whole file and parses it; format sniffed from the first line
/// unless forced ("n m" header means edge list).
inline Graph read_graph_file(const std::string& path, std::optional<GraphFormat> fmt = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!fmt) {
        std::istringstream probe(text);
        long long a, b;
        fmt = (probe >> a >> b) ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
    return read_graph(text, *fmt);
}

} // namespace turan
