#pragma once

// Named graphs and their labelings:
//   K_n            vertices 0..n-1
//   K_{a,b,...}    parts occupy consecutive labels in the order given
//   K44_minus      K_{4,4} on parts {0..3},{4..7} without the edge 3-7
//   K6_deltaY      ΔY applied to triangle {3,4,5} of K6; new vertex 6
//   petersen       outer cycle 0..4, spokes i-(i+5), inner pentagram
//                  (i+5)-((i+2)%5+5)
//   C_n            cycle 0-1-...-(n-1)-0

#include <cctype>
#include <string>
#include <string_view>

#include "linkless/transforms.hpp"

namespace linkless {

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw GraphError("part sizes must be at least 1");
        n += parts[i];
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    }
    if (n > kMaxVertices) throw GraphError("too many vertices");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

inline Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph k44_minus() { return delete_edge(complete_bipartite(4, 4), 3, 7); }

inline Graph k6_delta_y() { return delta_y(complete_graph(6), {3, 4, 5}); }

inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
}

namespace detail {

inline std::vector<int> parse_sizes(std::string_view body, std::string_view name) {
    std::vector<int> out;
    std::string digits;
    for (char c : std::string(body) + ",") {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
        } else if (c == ',') {
            if (digits.empty() || digits.size() > 3) throw GraphError("unknown graph name '" + std::string(name) + "'");
            out.push_back(std::stoi(digits));
            digits.clear();
        } else {
            throw GraphError("unknown graph name '" + std::string(name) + "'");
        }
    }
    return out;
}

}  // namespace detail

/// Accepts K6, K_6, K_{3,3}, K3,3, K_{1,3,3}, K44_minus, K6_deltaY,
/// petersen (or petersen_graph), C5, C_5.
inline Graph named_graph(std::string_view name) {
    const std::string original(name);
    if (name == "K44_minus" || name == "K_{4,4}^-") return k44_minus();
    if (name == "K6_deltaY" || name == "K_6^{deltaY}") return k6_delta_y();
    if (name == "petersen" || name == "petersen_graph" || name == "Petersen") return petersen_graph();
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C')) {
        const char kind = name[0];
        std::string_view body = name.substr(1);
        if (body.starts_with("_")) body.remove_prefix(1);
        if (body.starts_with("{") && body.ends_with("}")) body = body.substr(1, body.size() - 2);
        std::vector<int> sizes = detail::parse_sizes(body, original);
        if (kind == 'C' && sizes.size() == 1) return cycle_graph(sizes[0]);
        if (kind == 'K' && sizes.size() == 1) {
            if (sizes[0] > kMaxVertices) throw GraphError("too many vertices");
            return complete_graph(sizes[0]);
        }
        if (kind == 'K') return complete_multipartite(sizes);
    }
    throw GraphError("unknown graph name '" + original + "'");
}

}  // namespace linkless
