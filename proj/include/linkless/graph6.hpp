#pragma once

// graph6 text encoding: bytes are offset by 63, the header N(n) is one byte
// for n <= 62 and '~' plus three bytes for 63 <= n <= 258047, and the
// upper triangle of the adjacency matrix follows in column order, six bits
// per byte, big-endian, zero padded.

#include <string>
#include <string_view>

#include "linkless/graph.hpp"

namespace linkless {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(63 + n));  // n <= 32 always fits the short header
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

namespace detail {

inline int graph6_value(char c) {
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw Graph6Error(std::string("graph6: byte out of range: '") + c + "'");
    return v;
}

}  // namespace detail

/// Parses the vertex count header; returns n and advances `pos` past it.
inline long long graph6_header(std::string_view s, std::size_t& pos) {
    if (s.empty()) throw Graph6Error("graph6: empty line");
    if (s[0] != '~') {
        pos = 1;
        return detail::graph6_value(s[0]);
    }
    if (s.size() >= 2 && s[1] == '~') {
        if (s.size() < 8) throw Graph6Error("graph6: truncated 8-byte header");
        long long n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | detail::graph6_value(s[i]);
        pos = 8;
        return n;
    }
    if (s.size() < 4) throw Graph6Error("graph6: truncated 4-byte header");
    long long n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::graph6_value(s[i]);
    pos = 4;
    return n;
}

/// Decodes one graph6 line (trailing CR/LF ignored, optional ">>graph6<<"
/// prefix accepted). Throws Graph6Error for malformed input or n > 32.
inline Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (line.starts_with(kPrefix)) line.remove_prefix(kPrefix.size());
    std::size_t pos = 0;
    const long long n = graph6_header(line, pos);
    if (n > kMaxVertices) {
        throw Graph6Error("graph6: " + std::to_string(n) + " vertices exceeds the limit of " +
                          std::to_string(kMaxVertices));
    }
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != body) {
        throw Graph6Error("graph6: expected " + std::to_string(body) + " body bytes, got " +
                          std::to_string(line.size() - pos));
    }
    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = detail::graph6_value(line[pos + static_cast<std::size_t>(k / 6)]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = detail::graph6_value(line.back());
        if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: non-zero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace linkless
