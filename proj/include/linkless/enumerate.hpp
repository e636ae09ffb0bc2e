#pragma once

// Isomorph-free generation by canonical augmentation. A graph on k+1
// vertices is accepted as a child of its parent only when the added vertex
// lies in the automorphism orbit of the child's canonical deletion vertex:
// the minimum-degree vertex placed first by the canonical labelling.
// Deleting that vertex keeps bipartiteness and triangle-freeness, so both
// filters are applied to every node of the tree, and the edge window is
// pushed down through a bound on how many edges descendants can reach.

#include <charconv>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linkless/canonical.hpp"
#include "linkless/parallel.hpp"

namespace linkless {

enum class ClassFilter { all, bipartite, triangle_free };

inline std::string to_string(ClassFilter f) {
    switch (f) {
        case ClassFilter::all: return "all";
        case ClassFilter::bipartite: return "bipartite";
        case ClassFilter::triangle_free: return "triangle_free";
    }
    return "?";
}

class EnumerationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EnumerationSpec {
    int n = 0;
    ClassFilter class_filter = ClassFilter::all;
    int min_edges = 0;
    /// Negative means C(n,2).
    int max_edges = -1;
    bool connected_only = false;

    int max_possible_edges() const { return n * (n - 1) / 2; }
    int effective_max_edges() const { return max_edges < 0 ? max_possible_edges() : max_edges; }

    void validate() const {
        if (n < 0 || n > kMaxVertices) throw EnumerationError("n must lie in [0, 32]");
        if (min_edges < 0 || min_edges > effective_max_edges() || effective_max_edges() > max_possible_edges()) {
            throw EnumerationError("edge window must satisfy 0 <= min_edges <= max_edges <= C(n,2)");
        }
    }
};

/// Parses "0.3.1" into child indices; "" is the root.
inline std::vector<int> parse_token(std::string_view token) {
    std::vector<int> out;
    if (token.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = token.find('.', pos);
        std::string_view part = token.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || value < 0) {
            throw EnumerationError("malformed resume token '" + std::string(token) + "'");
        }
        out.push_back(value);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return out;
}

inline std::string format_token(const std::vector<int>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(path[i]);
    }
    return out;
}

class Enumerator {
public:
    explicit Enumerator(EnumerationSpec spec) : spec_(spec) {
        spec_.validate();
        max_edges_ = spec_.effective_max_edges();
    }

    const EnumerationSpec& spec() const { return spec_; }

    /// The single-vertex root (or the empty graph when n = 0).
    Graph root() const { return Graph(spec_.n == 0 ? 0 : 1, {}); }

    /// Accepted augmentations of `node`, canonically labelled, in the
    /// deterministic order that resume tokens index.
    std::vector<Graph> children(const Graph& node) const {
        std::vector<Graph> out;
        const int k = node.vertex_count();
        if (k >= spec_.n) return out;
        const int edges = node.edge_count();
        std::set<Graph, GraphLess> seen;
        const VertexSet all = node.vertices();
        for (VertexSet s = 0;; ++s) {
            if (s > all) break;
            const int d = popcount(s);
            if (edges + d > max_edges_) continue;
            if (!can_reach_min(k + 1, edges + d)) continue;
            if (spec_.class_filter == ClassFilter::triangle_free && !independent(node, s)) continue;
            // The new vertex must have minimum degree in the child.
            bool min_degree_ok = true;
            for (int u = 0; u < k && min_degree_ok; ++u) min_degree_ok = d <= node.degree(u) + (contains(s, u) ? 1 : 0);
            if (!min_degree_ok) continue;

            auto rows = node.rows();
            rows[k] = s;
            for_each_vertex(s, [&](Vertex u) { rows[u] |= bit(k); });
            Graph child = Graph::from_rows(k + 1, rows);
            if (spec_.class_filter == ClassFilter::bipartite && !is_bipartite(child)) continue;

            CanonicalLabeling canon = canonical_labeling(child);
            Vertex deletion = -1;
            for (Vertex v : canon.order) {
                if (child.degree(v) == d) {
                    deletion = v;
                    break;
                }
            }
            if (deletion != k && !same_orbit(child, k, deletion)) continue;
            if (seen.insert(canon.graph).second) out.push_back(canon.graph);
        }
        return out;
    }

    /// Node reached by following `token` from the root.
    Graph node_at(std::string_view token) const {
        Graph node = root();
        for (int index : parse_token(token)) {
            auto kids = children(node);
            if (index >= static_cast<int>(kids.size())) {
                throw EnumerationError("resume token '" + std::string(token) + "' leaves the tree");
            }
            node = kids[index];
        }
        return node;
    }

    /// Depth-first walk below `node`, emitting every accepted leaf.
    void walk(const Graph& node, const std::function<void(const Graph&)>& emit) const {
        if (node.vertex_count() == spec_.n) {
            if (accept_leaf(node)) emit(node);
            return;
        }
        for (const Graph& child : children(node)) walk(child, emit);
    }

    void walk(const std::function<void(const Graph&)>& emit) const { walk(root(), emit); }

    /// Tokens of all nodes at `depth` (capped at the leaf level), in order.
    std::vector<std::string> tokens_at_depth(int depth) const {
        std::vector<std::pair<std::vector<int>, Graph>> level{{{}, root()}};
        for (int d = 0; d < depth; ++d) {
            std::vector<std::pair<std::vector<int>, Graph>> next;
            bool grew = false;
            for (auto& [path, node] : level) {
                if (node.vertex_count() >= spec_.n) {
                    next.emplace_back(path, node);
                    continue;
                }
                auto kids = children(node);
                for (std::size_t i = 0; i < kids.size(); ++i) {
                    auto p = path;
                    p.push_back(static_cast<int>(i));
                    next.emplace_back(std::move(p), kids[i]);
                    grew = true;
                }
            }
            level = std::move(next);
            if (!grew) break;
        }
        std::vector<std::string> out;
        for (auto& entry : level) out.push_back(format_token(entry.first));
        return out;
    }

    /// All accepted leaves below `token`, in depth-first order. Subtrees
    /// are expanded on `jobs` threads and concatenated in tree order, so the
    /// result is identical for every job count.
    std::vector<Graph> collect(int jobs = 1, std::string_view token = "") const {
        std::vector<int> base = parse_token(token);
        Graph start = node_at(token);
        std::vector<std::pair<std::vector<int>, Graph>> frontier{{base, start}};
        // Expand breadth-first until there is enough work to share.
        while (jobs > 1 && frontier.size() < static_cast<std::size_t>(jobs) * 8) {
            std::vector<std::pair<std::vector<int>, Graph>> next;
            bool grew = false;
            for (auto& [path, node] : frontier) {
                if (node.vertex_count() >= spec_.n) {
                    next.emplace_back(path, node);
                    continue;
                }
                grew = true;
                auto kids = children(node);
                for (std::size_t i = 0; i < kids.size(); ++i) {
                    auto p = path;
                    p.push_back(static_cast<int>(i));
                    next.emplace_back(std::move(p), kids[i]);
                }
            }
            frontier = std::move(next);
            if (!grew) break;
        }
        std::vector<std::vector<Graph>> parts(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
            walk(frontier[i].second, [&](const Graph& g) { parts[i].push_back(g); });
        });
        std::vector<Graph> out;
        for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
        return out;
    }

private:
    struct GraphLess {
        bool operator()(const Graph& a, const Graph& b) const {
            if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
            return a.rows() < b.rows();
        }
    };

    static bool independent(const Graph& g, VertexSet s) {
        bool ok = true;
        for_each_vertex(s, [&](Vertex u) { ok = ok && (g.neighbors(u) & s) == 0; });
        return ok;
    }

    int class_cap(int k) const {
        if (spec_.class_filter == ClassFilter::all) return k * (k - 1) / 2;
        return (k * k) / 4;  // bipartite and triangle-free graphs alike
    }

    // Upper bound on the edges of any descendant on n vertices of a node with
    // k vertices and e edges. Each step adds a minimum-degree vertex, so a
    // step from j to j+1 vertices adds at most j edges and at most 2/(j+1)
    // of the new total.
    bool can_reach_min(int k, int e) const {
        long long reach = e;
        for (int j = k; j < spec_.n; ++j) {
            long long next = reach + j;
            if (j >= 2) next = std::min(next, reach * (j + 1) / (j - 1));
            reach = std::min<long long>(next, class_cap(j + 1));
        }
        return reach >= spec_.min_edges;
    }

    bool accept_leaf(const Graph& g) const {
        const int e = g.edge_count();
        if (e < spec_.min_edges || e > max_edges_) return false;
        return !spec_.connected_only || is_connected(g);
    }

    EnumerationSpec spec_;
    int max_edges_ = 0;
};

inline std::vector<Graph> enumerate(const EnumerationSpec& spec, int jobs = 1) {
    return Enumerator(spec).collect(jobs);
}

}  // namespace linkless
