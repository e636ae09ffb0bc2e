#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkless/graph.hpp"
#include "linkless/graph6.hpp"

namespace linkless {

/// Ordered partition of the vertex set. Cells are contiguous position
/// ranges of `lab`; `cell_end[p]` is meaningful only where p starts a cell.
struct OrderedPartition {
    int n = 0;
    std::array<Vertex, kMaxVertices> lab{};
    std::array<int, kMaxVertices> cell_end{};
    /// Bit p set <=> position p starts a cell.
    VertexSet starts = 0;

    static OrderedPartition unit(int n) {
        OrderedPartition p;
        p.n = n;
        std::iota(p.lab.begin(), p.lab.begin() + n, 0);
        if (n > 0) {
            p.starts = 1;
            p.cell_end[0] = n;
        }
        return p;
    }

    /// Builds from explicit cells, in order. The cells must partition V.
    static OrderedPartition from_cells(int n, const std::vector<VertexSet>& cells) {
        OrderedPartition p;
        p.n = n;
        int pos = 0;
        VertexSet seen = 0;
        for (VertexSet c : cells) {
            if (c == 0) continue;
            if (c & seen || c & ~prefix_set(n)) throw GraphError("cells do not partition the vertex set");
            seen |= c;
            p.starts |= bit(pos);
            int start = pos;
            for_each_vertex(c, [&](Vertex v) { p.lab[pos++] = v; });
            p.cell_end[start] = pos;
        }
        if (seen != prefix_set(n)) throw GraphError("cells do not cover the vertex set");
        return p;
    }

    bool discrete() const { return popcount(starts) == n; }

    VertexSet cell_set(int start) const {
        VertexSet s = 0;
        for (int i = start; i < cell_end[start]; ++i) s |= bit(lab[i]);
        return s;
    }

    /// First non-singleton cell, or -1 when discrete.
    int target_cell() const {
        for (VertexSet st = starts; st != 0; st &= st - 1) {
            int s = std::countr_zero(st);
            if (cell_end[s] - s > 1) return s;
        }
        return -1;
    }

    int start_of(Vertex v) const {
        for (VertexSet st = starts; st != 0; st &= st - 1) {
            int s = std::countr_zero(st);
            for (int i = s; i < cell_end[s]; ++i) {
                if (lab[i] == v) return s;
            }
        }
        return -1;
    }
};

namespace detail {

/// Splits cells until every cell has uniform neighbour counts into every
/// other cell. Decisions depend only on cell positions and counts, so the
/// procedure commutes with relabelling.
inline void refine(const Graph& g, OrderedPartition& p, VertexSet pending) {
    while (pending != 0) {
        const int s = std::countr_zero(pending);
        pending &= pending - 1;
        const VertexSet splitter = p.cell_set(s);
        for (VertexSet st = p.starts; st != 0; st &= st - 1) {
            const int c = std::countr_zero(st);
            const int end = p.cell_end[c];
            if (end - c == 1) continue;
            std::array<int, kMaxVertices> count{};
            bool uniform = true;
            for (int i = c; i < end; ++i) {
                count[i] = popcount(g.rows()[p.lab[i]] & splitter);
                uniform = uniform && count[i] == count[c];
            }
            if (uniform) continue;
            // Stable sort of the cell by count; cells are tiny.
            std::array<std::pair<int, Vertex>, kMaxVertices> items{};
            for (int i = c; i < end; ++i) items[i - c] = {count[i], p.lab[i]};
            std::sort(items.begin(), items.begin() + (end - c));
            for (int i = c; i < end; ++i) p.lab[i] = items[i - c].second;
            int group_start = c;
            for (int i = c + 1; i <= end; ++i) {
                if (i == end || items[i - c].first != items[i - 1 - c].first) {
                    p.starts |= bit(group_start);
                    p.cell_end[group_start] = i;
                    pending |= bit(group_start);
                    group_start = i;
                }
            }
        }
    }
}

inline OrderedPartition individualize(const OrderedPartition& p, int cell_start, Vertex v) {
    OrderedPartition q = p;
    const int end = p.cell_end[cell_start];
    int at = cell_start;
    while (q.lab[at] != v) ++at;
    std::swap(q.lab[cell_start], q.lab[at]);
    std::sort(q.lab.begin() + cell_start + 1, q.lab.begin() + end);
    q.cell_end[cell_start] = cell_start + 1;
    q.starts |= bit(cell_start + 1);
    q.cell_end[cell_start + 1] = end;
    return q;
}

using Rows = std::array<VertexSet, kMaxVertices>;

inline Rows permuted_rows(const Graph& g, const OrderedPartition& p) {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < p.n; ++i) pos[p.lab[i]] = i;
    Rows rows{};
    for (int i = 0; i < p.n; ++i) {
        for_each_vertex(g.rows()[p.lab[i]], [&](Vertex w) { rows[i] |= bit(pos[w]); });
    }
    return rows;
}

inline int compare_rows(const Rows& a, const Rows& b, int n) {
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

/// Search tree over individualise-refine nodes, keeping the leaf whose
/// relabelled adjacency rows are lexicographically least. Subtrees shown
/// equivalent by discovered automorphisms are skipped.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    void run(OrderedPartition start) {
        refine(g_, start, start.starts);
        path_.clear();
        dfs(start);
    }

    const Rows& best_rows() const { return best_rows_; }
    const std::array<Vertex, kMaxVertices>& best_lab() const { return best_lab_; }

private:
    using Perm = std::array<Vertex, kMaxVertices>;

    int common_prefix(const std::vector<Vertex>& other) const {
        std::size_t d = 0;
        while (d < path_.size() && d < other.size() && path_[d] == other[d]) ++d;
        return static_cast<int>(d);
    }

    void record_automorphism(const std::array<Vertex, kMaxVertices>& from_lab,
                             const std::array<Vertex, kMaxVertices>& to_lab) {
        Perm gamma{};
        for (int i = 0; i < n_; ++i) gamma[from_lab[i]] = to_lab[i];
        gens_.push_back(gamma);
    }

    // Returns the depth the search should resume at.
    int leaf(const OrderedPartition& p) {
        const int depth = static_cast<int>(path_.size());
        Rows rows = permuted_rows(g_, p);
        if (!have_first_) {
            have_first_ = true;
            first_rows_ = best_rows_ = rows;
            first_lab_ = best_lab_ = p.lab;
            first_path_ = best_path_ = path_;
            return depth;
        }
        if (compare_rows(rows, first_rows_, n_) == 0) {
            record_automorphism(p.lab, first_lab_);
            return common_prefix(first_path_);
        }
        int cmp = compare_rows(rows, best_rows_, n_);
        if (cmp == 0) {
            record_automorphism(p.lab, best_lab_);
            return common_prefix(best_path_);
        }
        if (cmp < 0) {
            best_rows_ = rows;
            best_lab_ = p.lab;
            best_path_ = path_;
        }
        return depth;
    }

    // Union-find orbits of the group generated by the automorphisms that
    // fix the current path pointwise.
    std::array<Vertex, kMaxVertices> stabilizer_orbits() const {
        std::array<Vertex, kMaxVertices> parent{};
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Perm& gamma : gens_) {
            bool fixes = true;
            for (Vertex v : path_) fixes = fixes && gamma[v] == v;
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                Vertex a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    int dfs(const OrderedPartition& p) {
        const int depth = static_cast<int>(path_.size());
        const int target = p.target_cell();
        if (target < 0) return leaf(p);

        std::vector<Vertex> cell(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
        std::sort(cell.begin(), cell.end());
        VertexSet explored_orbits = 0;
        std::size_t gens_seen = static_cast<std::size_t>(-1);
        std::array<Vertex, kMaxVertices> orbit{};
        for (Vertex v : cell) {
            if (gens_seen != gens_.size()) {
                orbit = stabilizer_orbits();
                gens_seen = gens_.size();
                VertexSet remapped = 0;
                for_each_vertex(explored_orbits, [&](Vertex r) { remapped |= bit(orbit[r]); });
                explored_orbits = remapped;
            }
            if (contains(explored_orbits, orbit[v])) continue;
            explored_orbits |= bit(orbit[v]);

            OrderedPartition child = individualize(p, target, v);
            refine(g_, child, bit(target) | bit(target + 1));
            path_.push_back(v);
            int resume = dfs(child);
            path_.pop_back();
            if (resume < depth) return resume;
        }
        return depth;
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> path_;
    bool have_first_ = false;
    Rows first_rows_{}, best_rows_{};
    std::array<Vertex, kMaxVertices> first_lab_{}, best_lab_{};
    std::vector<Vertex> first_path_, best_path_;
    std::vector<Perm> gens_;
};

}  // namespace detail

/// A canonical relabelling: `order[i]` is the original vertex placed at
/// canonical position i, and `graph` is g relabelled accordingly.
struct CanonicalLabeling {
    Graph graph;
    std::vector<Vertex> order;
};

/// Canonical labelling relative to an ordered colouring of the vertices.
/// Graphs with colourings that match cell-by-cell get equal results iff
/// some isomorphism maps each cell onto its counterpart.
inline CanonicalLabeling canonical_labeling(const Graph& g, const OrderedPartition& colouring) {
    if (colouring.n != g.vertex_count()) throw GraphError("partition size mismatch");
    const int n = g.vertex_count();
    if (n == 0) return {g, {}};
    detail::CanonicalSearch search(g);
    search.run(colouring);
    CanonicalLabeling out;
    out.graph = Graph::from_rows(n, search.best_rows());
    out.order.assign(search.best_lab().begin(), search.best_lab().begin() + n);
    return out;
}

inline CanonicalLabeling canonical_labeling(const Graph& g) {
    return canonical_labeling(g, OrderedPartition::unit(g.vertex_count()));
}

/// Canonical graph6 line; equal for two graphs iff they are isomorphic.
inline std::string canonical_bytes(const Graph& g) { return to_graph6(canonical_labeling(g).graph); }

using BigCount = boost::multiprecision::cpp_int;

/// |Aut(g)|, by orbit-stabiliser along an individualisation chain. Orbits
/// are found by comparing canonical forms of individualised colourings.
inline BigCount automorphism_count(const Graph& g) {
    const int n = g.vertex_count();
    BigCount count = 1;
    OrderedPartition p = OrderedPartition::unit(n);
    detail::refine(g, p, p.starts);
    while (true) {
        const int target = p.target_cell();
        if (target < 0) break;
        auto individualized = [&](Vertex v) {
            OrderedPartition q = detail::individualize(p, target, v);
            detail::refine(g, q, bit(target) | bit(target + 1));
            return q;
        };
        std::vector<Vertex> cell(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
        const Vertex first = *std::min_element(cell.begin(), cell.end());
        const OrderedPartition chosen = individualized(first);
        const Graph key = canonical_labeling(g, chosen).graph;
        int orbit = 0;
        for (Vertex w : cell) {
            if (w == first) {
                ++orbit;
                continue;
            }
            OrderedPartition other = individualized(w);
            // Different cell structure means no partition-preserving map.
            if (other.starts != chosen.starts) continue;
            bool same_shape = true;
            for_each_vertex(other.starts, [&](Vertex s) { same_shape = same_shape && other.cell_end[s] == chosen.cell_end[s]; });
            if (same_shape && canonical_labeling(g, other).graph == key) ++orbit;
        }
        count *= orbit;
        p = chosen;
    }
    return count;
}

struct CanonicalForm {
    std::string canonical_bytes;
    BigCount automorphism_count;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm canonical_form(const Graph& g) {
    return {canonical_bytes(g), automorphism_count(g)};
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.vertex_count() == 0) return true;
    return canonical_labeling(g).graph == canonical_labeling(h).graph;
}

/// True when some automorphism of g maps v to w.
inline bool same_orbit(const Graph& g, Vertex v, Vertex w) {
    if (v == w) return true;
    if (g.degree(v) != g.degree(w)) return false;
    const int n = g.vertex_count();
    auto colour = [&](Vertex x) {
        return OrderedPartition::from_cells(n, {bit(x), g.vertices() & ~bit(x)});
    };
    return canonical_labeling(g, colour(v)).graph == canonical_labeling(g, colour(w)).graph;
}

}  // namespace linkless
