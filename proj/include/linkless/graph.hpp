#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linkless {

/// Largest vertex count a Graph can hold. Adjacency rows are 32-bit masks.
inline constexpr int kMaxVertices = 32;

using Vertex = int;
/// Bit i set <=> vertex i is a member.
using VertexSet = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr VertexSet prefix_set(int n) { return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Calls f(v) for each member of s in increasing order.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
    while (s != 0) {
        f(static_cast<Vertex>(std::countr_zero(s)));
        s &= s - 1;
    }
}

inline std::vector<Vertex> to_vector(VertexSet s) {
    std::vector<Vertex> out;
    for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

/// Simple undirected graph on vertices 0..n-1 with dense bitset adjacency.
///
/// Values are immutable once built: every operation below returns a new
/// Graph. Equality is label-wise; use are_isomorphic() for structural
/// comparison.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs collapse; self-loops
    /// and out-of-range endpoints throw GraphError naming the pair.
    Graph(int n, const std::vector<Edge>& edges) : n_(n) {
        if (n < 0 || n > kMaxVertices) {
            throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVertices) + "]");
        }
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint outside [0, " + std::to_string(n) + ")");
            }
            if (u == v) {
                throw GraphError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
            }
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
    }

    /// Builds from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(int n, const std::array<VertexSet, kMaxVertices>& rows) {
        Graph g;
        g.n_ = n;
        VertexSet all = prefix_set(n);
        for (int v = 0; v < n; ++v) {
            if (rows[v] & ~all || contains(rows[v], v)) {
                throw GraphError("adjacency row " + std::to_string(v) + " is malformed");
            }
            g.adj_[v] = rows[v];
        }
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (contains(g.adj_[u], v) != contains(g.adj_[v], u)) {
                    throw GraphError("adjacency rows are not symmetric");
                }
            }
        }
        return g;
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return prefix_set(n_); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
        return twice / 2;
    }

    bool has_edge(Vertex u, Vertex v) const {
        return u >= 0 && v >= 0 && u < n_ && v < n_ && contains(adj_[u], v);
    }

    /// N(v)
    VertexSet neighbors(Vertex v) const { return adj_[check(v)]; }
    /// N[v]
    VertexSet closed_neighbors(Vertex v) const { return adj_[check(v)] | bit(v); }

    /// N(S): vertices outside S adjacent to some member of S.
    VertexSet neighbors_of_set(VertexSet s) const {
        VertexSet out = 0;
        for_each_vertex(s & vertices(), [&](Vertex v) { out |= adj_[v]; });
        return out & ~s;
    }

    int degree(Vertex v) const { return popcount(adj_[check(v)]); }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, popcount(adj_[v]));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, popcount(adj_[v]));
        return d;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> out(n_);
        for (int v = 0; v < n_; ++v) out[v] = popcount(adj_[v]);
        return out;
    }

    /// Edges (u,v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u) {
            for_each_vertex(adj_[u] & ~prefix_set(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
        }
        return out;
    }

    const std::array<VertexSet, kMaxVertices>& rows() const { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Vertex check(Vertex v) const {
        if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " not in graph");
        return v;
    }

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

/// Relabels g so that old vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
    VertexSet seen = 0;
    for (Vertex p : perm) {
        if (p < 0 || p >= n || contains(seen, p)) throw GraphError("not a permutation");
        seen |= bit(p);
    }
    std::array<VertexSet, kMaxVertices> rows{};
    for (int u = 0; u < n; ++u) {
        for_each_vertex(g.neighbors(u), [&](Vertex v) { rows[perm[u]] |= bit(perm[v]); });
    }
    return Graph::from_rows(n, rows);
}

/// G[S], relabeled so the members of s keep their relative order.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    s &= g.vertices();
    std::array<Vertex, kMaxVertices> index{};
    int k = 0;
    for_each_vertex(s, [&](Vertex v) { index[v] = k++; });
    std::array<VertexSet, kMaxVertices> rows{};
    for_each_vertex(s, [&](Vertex v) {
        for_each_vertex(g.neighbors(v) & s, [&](Vertex w) { rows[index[v]] |= bit(index[w]); });
    });
    return Graph::from_rows(k, rows);
}

/// G - v. Labels above v shift down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    return induced_subgraph(g, g.vertices() & ~bit(v));
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    }
    auto rows = g.rows();
    rows[u] &= ~bit(v);
    rows[v] &= ~bit(u);
    return Graph::from_rows(g.vertex_count(), rows);
}

/// Graph with one extra edge; u,v must be distinct, in range and non-adjacent.
inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || g.has_edge(u, v)) {
        throw GraphError("cannot add edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    auto rows = g.rows();
    rows[u] |= bit(v);
    rows[v] |= bit(u);
    return Graph::from_rows(g.vertex_count(), rows);
}

/// Merges the endpoints of edge uv into min(u,v); max(u,v) is removed and
/// higher labels shift down. Parallel edges and loops never appear.
inline Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    }
    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    auto rows = g.rows();
    VertexSet merged = (rows[keep] | rows[drop]) & ~bit(keep) & ~bit(drop);
    for (int w = 0; w < g.vertex_count(); ++w) rows[w] &= ~bit(drop) & ~bit(keep);
    rows[keep] = merged;
    for_each_vertex(merged, [&](Vertex w) { rows[w] |= bit(keep); });
    rows[drop] = 0;
    return induced_subgraph(Graph::from_rows(g.vertex_count(), rows), g.vertices() & ~bit(drop));
}

/// Vertices reachable from `start` inside `within`.
inline VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
    if (!contains(within, start)) return 0;
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

/// True when G[s] is connected; the empty set counts as disconnected.
inline bool is_connected_set(const Graph& g, VertexSet s) {
    if (s == 0) return false;
    return reachable(g, std::countr_zero(s), s) == s;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || is_connected_set(g, g.vertices());
}

inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within & g.vertices();
    while (left != 0) {
        VertexSet c = reachable(g, std::countr_zero(left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

/// Number of 3-cliques.
inline long long triangle_count(const Graph& g) {
    long long t = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        VertexSet higher = g.neighbors(u) & ~prefix_set(u + 1);
        for_each_vertex(higher, [&](Vertex v) { t += popcount(g.neighbors(v) & higher & ~prefix_set(v + 1)); });
    }
    return t;
}

inline bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool found = false;
        for_each_vertex(g.neighbors(u), [&](Vertex v) { found = found || (g.neighbors(v) & g.neighbors(u)) != 0; });
        if (found) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Bipartitions

struct Bipartition {
    VertexSet class0 = 0;
    VertexSet class1 = 0;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

inline bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
    if ((b.class0 & b.class1) != 0 || (b.class0 | b.class1) != g.vertices()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet own = contains(b.class0, v) ? b.class0 : b.class1;
        if (g.neighbors(v) & own) return false;
    }
    return true;
}

/// 2-colouring where, per component, the side holding the least vertex is
/// class0. Empty when g has an odd cycle.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
    Bipartition b;
    VertexSet unseen = g.vertices();
    while (unseen != 0) {
        Vertex root = std::countr_zero(unseen);
        VertexSet side[2] = {bit(root), 0};
        VertexSet frontier = bit(root);
        int parity = 0;
        VertexSet seen = bit(root);
        while (frontier != 0) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
            if (next & side[parity]) return std::nullopt;
            parity ^= 1;
            side[parity] |= next;
            frontier = next & ~seen;
            seen |= next;
        }
        if (side[0] & side[1]) return std::nullopt;
        b.class0 |= side[0];
        b.class1 |= side[1];
        unseen &= ~seen;
    }
    return b;
}

inline bool is_bipartite(const Graph& g) { return bipartition_of(g).has_value(); }

/// Bipartite complement of G[S]: on S (relabeled compactly, order kept),
/// uv is an edge iff exactly one of u,v lies in class0 and uv is not an
/// edge of G.
inline Graph bipartite_complement(const Graph& g, VertexSet s, const Bipartition& b) {
    if (!is_valid_bipartition(g, b)) throw GraphError("not a bipartition of the graph");
    if (s & ~g.vertices()) throw GraphError("vertex set is not a subset of V(G)");
    std::array<VertexSet, kMaxVertices> rows{};
    for_each_vertex(s, [&](Vertex u) {
        VertexSet other = contains(b.class0, u) ? b.class1 : b.class0;
        rows[u] = other & s & ~g.neighbors(u);
    });
    return induced_subgraph(Graph::from_rows(g.vertex_count(), rows), s);
}

// ---------------------------------------------------------------------------
// Separations

struct Separation {
    VertexSet side_a = 0;
    VertexSet side_b = 0;
    int order = 0;
    /// Both A-B and B-A are non-empty.
    bool non_trivial = false;

    friend bool operator==(const Separation&, const Separation&) = default;
};

/// (A,B) is a separation when A ∪ B = V(G) and no edge joins A-B to B-A.
inline std::optional<Separation> check_separation(const Graph& g, VertexSet a, VertexSet b) {
    if ((a | b) != g.vertices() || ((a | b) & ~g.vertices())) return std::nullopt;
    VertexSet only_a = a & ~b;
    VertexSet only_b = b & ~a;
    if (g.neighbors_of_set(only_a) & only_b) return std::nullopt;
    return Separation{a, b, popcount(a & b), only_a != 0 && only_b != 0};
}

/// No non-trivial separation of g has a separator strictly inside A ∩ B.
inline bool is_minimal_separation(const Graph& g, const Separation& sep) {
    const VertexSet cut = sep.side_a & sep.side_b;
    if (cut == 0) return true;
    // Enumerate proper subsets of the separator.
    for (VertexSet x = (cut - 1) & cut;; x = (x - 1) & cut) {
        if (components(g, g.vertices() & ~x).size() >= 2) return false;
        if (x == 0) break;
    }
    return true;
}

/// |V(G0)| + |V(G1)| - |V(G)|.
inline int super_separation_order(const Graph& g0, const Graph& g1, const Graph& g) {
    return g0.vertex_count() + g1.vertex_count() - g.vertex_count();
}

}  // namespace linkless
