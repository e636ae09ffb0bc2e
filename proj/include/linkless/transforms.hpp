#pragma once

#include <array>

#include "linkless/graph.hpp"

namespace linkless {

/// YΔ: delete a degree-3 vertex v and join every pair of its neighbours
/// that is not already adjacent. Labels above v shift down.
inline Graph y_delta(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    if (g.degree(v) != 3) {
        throw GraphError("YΔ needs a degree-3 vertex; vertex " + std::to_string(v) + " has degree " +
                         std::to_string(g.degree(v)));
    }
    auto rows = g.rows();
    const VertexSet nbrs = g.neighbors(v);
    for_each_vertex(nbrs, [&](Vertex u) { rows[u] |= nbrs & ~bit(u); });
    return delete_vertex(Graph::from_rows(g.vertex_count(), rows), v);
}

/// ΔY: remove the three edges of triangle t and add vertex n adjacent to
/// exactly the triangle's vertices.
inline Graph delta_y(const Graph& g, const std::array<Vertex, 3>& t) {
    const auto [a, b, c] = t;
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) {
        throw GraphError("ΔY needs a triangle; {" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + "} is not one");
    }
    const int n = g.vertex_count();
    if (n >= kMaxVertices) throw GraphError("ΔY would exceed the vertex limit");
    auto rows = g.rows();
    const VertexSet tri = bit(a) | bit(b) | bit(c);
    for (Vertex x : t) rows[x] = (rows[x] & ~tri) | bit(n);
    rows[n] = tri;
    return Graph::from_rows(n + 1, rows);
}

/// All triangles {a<b<c} of g, sorted.
inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (int a = 0; a < g.vertex_count(); ++a) {
        VertexSet higher = g.neighbors(a) & ~prefix_set(a + 1);
        for_each_vertex(higher, [&](Vertex b) {
            for_each_vertex(g.neighbors(b) & higher & ~prefix_set(b + 1), [&](Vertex c) { out.push_back({a, b, c}); });
        });
    }
    return out;
}

}  // namespace linkless
