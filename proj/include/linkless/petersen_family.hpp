#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkless/canonical.hpp"
#include "linkless/named.hpp"
#include "linkless/transforms.hpp"

namespace linkless {

/// The seven graphs reachable from K6 by YΔ and ΔY, canonically labelled
/// and sorted by (vertex count, canonical graph6).
struct PetersenFamily {
    std::vector<Graph> members;
    std::vector<std::string> canonical_bytes;

    /// Index of the member isomorphic to g, or -1.
    int index_of(const Graph& g) const {
        const std::string key = canonical_bytes_of(g);
        auto it = std::find(canonical_bytes.begin(), canonical_bytes.end(), key);
        return it == canonical_bytes.end() ? -1 : static_cast<int>(it - canonical_bytes.begin());
    }

private:
    static std::string canonical_bytes_of(const Graph& g) { return linkless::canonical_bytes(g); }
};

/// Every graph one YΔ or ΔY step away from g, in a fixed order.
inline std::vector<Graph> transformation_neighbors(const Graph& g) {
    std::vector<Graph> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 3) out.push_back(y_delta(g, v));
    }
    if (g.vertex_count() < kMaxVertices) {
        for (const auto& t : triangles(g)) out.push_back(delta_y(g, t));
    }
    return out;
}

/// Breadth-first closure of K6 under both transformations, deduplicated by
/// canonical form. Throws std::logic_error unless exactly seven graphs
/// result.
inline PetersenFamily generate_petersen_family() {
    std::map<std::string, Graph> found;
    std::deque<Graph> queue{complete_graph(6)};
    found.emplace(canonical_bytes(queue.front()), canonical_labeling(queue.front()).graph);
    while (!queue.empty()) {
        Graph g = queue.front();
        queue.pop_front();
        for (const Graph& next : transformation_neighbors(g)) {
            CanonicalLabeling canon = canonical_labeling(next);
            std::string key = to_graph6(canon.graph);
            if (found.emplace(key, canon.graph).second) {
                if (found.size() > 64) throw std::logic_error("Petersen family closure did not terminate");
                queue.push_back(canon.graph);
            }
        }
    }
    if (found.size() != 7) {
        throw std::logic_error("Petersen family closure has " + std::to_string(found.size()) + " members, not 7");
    }
    std::vector<std::pair<std::string, Graph>> sorted(found.begin(), found.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second.vertex_count() != b.second.vertex_count()) return a.second.vertex_count() < b.second.vertex_count();
        return a.first < b.first;
    });
    PetersenFamily family;
    for (auto& [key, g] : sorted) {
        family.canonical_bytes.push_back(key);
        family.members.push_back(g);
    }
    return family;
}

inline const PetersenFamily& petersen_family() {
    static const PetersenFamily family = generate_petersen_family();
    return family;
}

/// Name of the named graph isomorphic to g, or "" when none matches.
inline std::string recognize_named_graph(const Graph& g) {
    static const std::vector<std::pair<std::string, Graph>> known{
        {"K6", complete_graph(6)},
        {"K6_deltaY", k6_delta_y()},
        {"K_{1,3,3}", complete_multipartite({1, 3, 3})},
        {"K44_minus", k44_minus()},
        {"petersen", petersen_graph()},
    };
    for (const auto& [name, candidate] : known) {
        if (are_isomorphic(g, candidate)) return name;
    }
    return "";
}

}  // namespace linkless
