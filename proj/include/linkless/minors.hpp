#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "linkless/canonical.hpp"
#include "linkless/petersen_family.hpp"

namespace linkless {

/// Witness that H is a minor of G: branch_sets[x] is the set of G-vertices
/// contracted onto H-vertex x.
struct MinorModel {
    std::vector<VertexSet> branch_sets;

    friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

struct ModelCheck {
    bool valid = false;
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// Checks every model invariant; on failure `reason` says which one broke.
inline ModelCheck check_model(const Graph& g, const Graph& h, const MinorModel& m) {
    if (static_cast<int>(m.branch_sets.size()) != h.vertex_count()) {
        return {false, "model has " + std::to_string(m.branch_sets.size()) + " branch sets for " +
                           std::to_string(h.vertex_count()) + " pattern vertices"};
    }
    VertexSet used = 0;
    for (int x = 0; x < h.vertex_count(); ++x) {
        const VertexSet b = m.branch_sets[x];
        if (b == 0) return {false, "branch set " + std::to_string(x) + " is empty"};
        if (b & ~g.vertices()) return {false, "branch set " + std::to_string(x) + " leaves the host"};
        if (b & used) return {false, "branch set " + std::to_string(x) + " overlaps an earlier one"};
        if (!is_connected_set(g, b)) return {false, "branch set " + std::to_string(x) + " is not connected"};
        used |= b;
    }
    for (auto [x, y] : h.edges()) {
        if ((g.neighbors_of_set(m.branch_sets[x]) & m.branch_sets[y]) == 0) {
            return {false, "no host edge between branch sets " + std::to_string(x) + " and " + std::to_string(y)};
        }
    }
    return {true, ""};
}

inline bool verify_model(const Graph& g, const Graph& h, const MinorModel& m) { return check_model(g, h, m).valid; }

struct MinorSearchOptions {
    /// Reject immediately when H has more vertices or edges than G.
    bool prefilter = true;
};

namespace detail {

/// Backtracking over pattern vertices. Each pattern vertex receives a
/// connected branch set grown from its least host vertex; a placement is
/// kept only if every already-placed pattern neighbour touches it and every
/// unplaced pattern vertex can still find a free connected region touching
/// all of its placed neighbours.
class MinorSearch {
public:
    MinorSearch(const Graph& g, const Graph& h) : g_(g), h_(h), hn_(h.vertex_count()) {
        plan_order();
        branch_.assign(hn_, 0);
    }

    std::optional<MinorModel> run() {
        if (hn_ == 0) return MinorModel{};
        if (place(0, 0)) return MinorModel{branch_};
        return std::nullopt;
    }

private:
    void plan_order() {
        VertexSet placed = 0;
        while (static_cast<int>(order_.size()) < hn_) {
            int best = -1;
            auto key = [&](Vertex x) {
                return std::tuple(popcount(h_.neighbors(x) & placed), h_.degree(x), -x);
            };
            for (int x = 0; x < hn_; ++x) {
                if (contains(placed, x)) continue;
                if (best < 0 || key(x) > key(best)) best = x;
            }
            order_.push_back(best);
            placed |= bit(best);
        }
        // Earlier member of the same twin class in placement order, if any.
        // Members of a class of pairwise twins are interchangeable, so their
        // branch sets may be taken in increasing order of least vertex.
        twin_before_.assign(hn_, -1);
        std::vector<std::vector<Vertex>> classes;
        for (Vertex x : order_) {
            bool joined = false;
            for (auto& cls : classes) {
                bool all = true;
                for (Vertex y : cls) all = all && twins(x, y);
                if (all) {
                    twin_before_[x] = cls.back();
                    cls.push_back(x);
                    joined = true;
                    break;
                }
            }
            if (!joined) classes.push_back({x});
        }
    }

    bool twins(Vertex x, Vertex y) const {
        return (h_.neighbors(x) & ~bit(y)) == (h_.neighbors(y) & ~bit(x));
    }

    bool place(int level, VertexSet used) {
        if (level == hn_) return true;
        const Vertex x = order_[level];
        const VertexSet free = g_.vertices() & ~used;
        const int still_needed = hn_ - level - 1;
        const int budget = popcount(free) - still_needed;
        if (budget < 1) return false;

        VertexSet must_touch_all = 0;  // placed pattern neighbours
        for (int i = 0; i < level; ++i) {
            if (h_.has_edge(x, order_[i])) must_touch_all |= bit(order_[i]);
        }
        int min_root = 0;
        if (twin_before_[x] >= 0) min_root = std::countr_zero(branch_[twin_before_[x]]) + 1;

        for (int r = min_root; r < g_.vertex_count(); ++r) {
            if (!contains(free, r)) continue;
            const VertexSet allowed = free & ~prefix_set(r + 1);
            if (grow(level, x, used, bit(r), g_.neighbors(r) & allowed, 0, allowed, budget, must_touch_all)) {
                return true;
            }
        }
        return false;
    }

    // Enumerates each connected set containing `b` inside `allowed` once.
    bool grow(int level, Vertex x, VertexSet used, VertexSet b, VertexSet ext, VertexSet excl, VertexSet allowed,
              int budget, VertexSet must_touch_all) {
        if (try_set(level, x, used, b, must_touch_all)) return true;
        if (popcount(b) == budget) return false;
        while (ext != 0) {
            const Vertex w = std::countr_zero(ext);
            ext &= ext - 1;
            VertexSet grown = b | bit(w);
            VertexSet next_ext = (ext | (g_.neighbors(w) & allowed)) & ~grown & ~excl;
            if (grow(level, x, used, grown, next_ext, excl, allowed, budget, must_touch_all)) return true;
            excl |= bit(w);
        }
        return false;
    }

    bool try_set(int level, Vertex x, VertexSet used, VertexSet b, VertexSet must_touch_all) {
        const VertexSet reach = g_.neighbors_of_set(b);
        bool ok = true;
        for_each_vertex(must_touch_all, [&](Vertex y) { ok = ok && (reach & branch_[y]) != 0; });
        if (!ok) return false;

        const VertexSet now_used = used | b;
        const VertexSet free = g_.vertices() & ~now_used;
        if (popcount(free) < hn_ - level - 1) return false;
        branch_[x] = b;
        if (!feasible(level, free)) {
            branch_[x] = 0;
            return false;
        }
        if (place(level + 1, now_used)) return true;
        branch_[x] = 0;
        return false;
    }

    // Necessary conditions for completing the model from the current state.
    bool feasible(int level, VertexSet free) const {
        VertexSet placed = 0;
        for (int i = 0; i <= level; ++i) placed |= bit(order_[i]);
        const std::vector<VertexSet> regions = components(g_, free);

        for (int i = 0; i <= level; ++i) {
            const Vertex y = order_[i];
            const int open = popcount(h_.neighbors(y) & ~placed);
            if (open > popcount(g_.neighbors_of_set(branch_[y]) & free)) return false;
        }
        for (int i = level + 1; i < hn_; ++i) {
            const Vertex y = order_[i];
            const VertexSet anchors = h_.neighbors(y) & placed;
            bool found = false;
            for (VertexSet region : regions) {
                bool touches = true;
                for_each_vertex(anchors, [&](Vertex z) {
                    touches = touches && (g_.neighbors_of_set(branch_[z]) & region) != 0;
                });
                if (touches) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    int hn_;
    std::vector<Vertex> order_;
    std::vector<int> twin_before_;
    std::vector<VertexSet> branch_;
};

}  // namespace detail

/// A branch-set model of h in g, or nothing when h is not a minor of g.
/// Results are deterministic: ties are broken by vertex label throughout.
inline std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, MinorSearchOptions options = {}) {
    if (options.prefilter && (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())) {
        return std::nullopt;
    }
    return detail::MinorSearch(g, h).run();
}

inline bool has_minor(const Graph& g, const Graph& h) { return find_minor(g, h).has_value(); }

namespace detail {

// Is h isomorphic to a spanning subgraph of g (same vertex count)?
inline bool spanning_subgraph(const Graph& g, const Graph& h) {
    const int n = h.vertex_count();
    if (g.vertex_count() != n || h.edge_count() > g.edge_count()) return false;
    std::vector<Vertex> order;
    {
        // Pattern vertices by descending degree keeps the search shallow.
        for (int x = 0; x < n; ++x) order.push_back(x);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    }
    std::array<Vertex, kMaxVertices> image{};
    auto extend = [&](auto&& self, int i, VertexSet used) -> bool {
        if (i == n) return true;
        const Vertex x = order[i];
        for (int v = 0; v < n; ++v) {
            if (contains(used, v) || g.degree(v) < h.degree(x)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (h.has_edge(x, order[j])) ok = g.has_edge(v, image[order[j]]);
            }
            if (!ok) continue;
            image[x] = v;
            if (self(self, i + 1, used | bit(v))) return true;
        }
        return false;
    };
    return extend(extend, 0, 0);
}

}  // namespace detail

/// Minor test by exhaustive vertex deletion and edge contraction down to
/// |V(h)| vertices, followed by a spanning-subgraph test; intermediate
/// graphs are memoised by canonical form. Slower than find_minor and shares
/// none of its search, which makes it a cross-check for it.
inline bool has_minor_by_contraction(const Graph& g, const Graph& h) {
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return false;
    std::unordered_set<std::string> dead;
    auto search = [&](auto&& self, const Graph& state) -> bool {
        if (state.edge_count() < h.edge_count()) return false;
        if (state.vertex_count() == h.vertex_count()) return detail::spanning_subgraph(state, h);
        CanonicalLabeling canon = canonical_labeling(state);
        std::string key = to_graph6(canon.graph);
        if (dead.contains(key)) return false;
        const Graph& s = canon.graph;
        for (int v = 0; v < s.vertex_count(); ++v) {
            if (self(self, delete_vertex(s, v))) return true;
        }
        for (auto [u, v] : s.edges()) {
            if (self(self, contract_edge(s, u, v))) return true;
        }
        dead.insert(std::move(key));
        return false;
    };
    return search(search, g);
}

// ---------------------------------------------------------------------------
// Linkless embeddability

struct Obstruction {
    /// Index into petersen_family().members.
    int family_index = -1;
    MinorModel model;
};

struct LinklessResult {
    bool linkless = true;
    std::optional<Obstruction> obstruction;

    explicit operator bool() const { return linkless; }
};

/// Linklessly embeddable iff no member of the Petersen family is a minor.
/// Members are tried in family order (smallest first); the reported
/// obstruction is the first member found.
inline LinklessResult check_linkless(const Graph& g) {
    const PetersenFamily& family = petersen_family();
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        if (auto model = find_minor(g, family.members[i])) {
            return {false, Obstruction{static_cast<int>(i), std::move(*model)}};
        }
    }
    return {true, std::nullopt};
}

inline bool is_linkless(const Graph& g) { return check_linkless(g).linkless; }

/// Patterns excluded in the bipartite characterisation: K6, K_{1,3,3},
/// K_{4,4}^- and K6 after one ΔY.
inline const std::vector<std::pair<std::string, Graph>>& bipartite_obstructions() {
    static const std::vector<std::pair<std::string, Graph>> patterns{
        {"K6", complete_graph(6)},
        {"K_{1,3,3}", complete_multipartite({1, 3, 3})},
        {"K6_deltaY", k6_delta_y()},
        {"K44_minus", k44_minus()},
    };
    return patterns;
}

inline bool is_bipartite_obstruction_free(const Graph& g) {
    for (const auto& [name, pattern] : bipartite_obstructions()) {
        if (has_minor(g, pattern)) return false;
    }
    return true;
}

}  // namespace linkless
