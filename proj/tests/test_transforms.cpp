#include <gtest/gtest.h>

#include <random>

#include "linkless/named.hpp"
#include "linkless/petersen_family.hpp"
#include "linkless/transforms.hpp"

using namespace linkless;

namespace {

int nonadjacent_pairs(const Graph& g, Vertex v) {
    auto nb = to_vector(g.neighbors(v));
    int count = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) count += !g.has_edge(nb[i], nb[j]);
    return count;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace

TEST(YDelta, K4GivesTriangle) {
    for (int v = 0; v < 4; ++v) EXPECT_EQ(y_delta(complete_graph(4), v), complete_graph(3));
}

TEST(YDelta, K33GivesFiveVerticesNineEdges) {
    Graph g = y_delta(complete_bipartite(3, 3), 0);
    EXPECT_EQ(g.vertex_count(), 5);
    EXPECT_EQ(g.edge_count(), 9);
}

TEST(YDelta, NeedsDegreeThree) {
    // K_{1,3,3} has degrees 6 and 4 only.
    Graph k133 = complete_multipartite({1, 3, 3});
    for (int v = 0; v < 7; ++v) EXPECT_THROW(y_delta(k133, v), GraphError);
    EXPECT_THROW(y_delta(complete_graph(4), 4), GraphError);
}

TEST(YDelta, UndoesDeltaYOnK6) {
    Graph g = k6_delta_y();
    EXPECT_EQ(g.degree(6), 3);
    EXPECT_TRUE(are_isomorphic(y_delta(g, 6), complete_graph(6)));
}

TEST(DeltaY, Examples) {
    Graph g = delta_y(complete_graph(6), {0, 1, 2});
    EXPECT_EQ(g.vertex_count(), 7);
    EXPECT_EQ(g.edge_count(), 15);
    EXPECT_TRUE(are_isomorphic(g, k6_delta_y()));

    Graph claw = delta_y(complete_graph(3), {0, 1, 2});
    EXPECT_TRUE(are_isomorphic(claw, complete_bipartite(1, 3)));

    Graph k4 = delta_y(complete_graph(4), {0, 1, 2});
    EXPECT_EQ(k4.vertex_count(), 5);
    EXPECT_EQ(k4.edge_count(), 6);
    // the triangle's edges are gone, leaving K_{2,3}
    EXPECT_EQ(triangle_count(k4), 0);
    EXPECT_TRUE(are_isomorphic(k4, complete_bipartite(2, 3)));

    EXPECT_THROW(delta_y(cycle_graph(4), {0, 1, 2}), GraphError);
    EXPECT_THROW(delta_y(complete_graph(3), {0, 1, 1}), GraphError);
    EXPECT_THROW(delta_y(complete_graph(32), {0, 1, 2}), GraphError);
}

TEST(TransformProperties, RoundTripAndEdgeCountLaws) {
    std::mt19937_64 rng(31);
    int roundtrips = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Graph g = random_graph(rng, 4 + trial % 6, 0.25 + (trial % 4) * 0.1);
        for (const auto& t : triangles(g)) EXPECT_EQ(delta_y(g, t).edge_count(), g.edge_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 3) continue;
            Graph h = y_delta(g, v);
            EXPECT_EQ(h.edge_count(), g.edge_count() - 3 + nonadjacent_pairs(g, v));
            if (nonadjacent_pairs(g, v) != 3) continue;
            // neighbours of v in h keep their order and shift past v
            auto nb = to_vector(g.neighbors(v));
            std::array<Vertex, 3> t{};
            for (int i = 0; i < 3; ++i) t[i] = nb[i] > v ? nb[i] - 1 : nb[i];
            EXPECT_TRUE(are_isomorphic(delta_y(h, t), g));
            ++roundtrips;
        }
    }
    EXPECT_GT(roundtrips, 100);
}

TEST(PetersenFamily, SevenMembersFifteenEdges) {
    const PetersenFamily& f = petersen_family();
    ASSERT_EQ(f.members.size(), 7u);
    std::vector<int> sizes;
    for (const Graph& g : f.members) {
        EXPECT_EQ(g.edge_count(), 15);
        sizes.push_back(g.vertex_count());
    }
    EXPECT_EQ(sizes, (std::vector<int>{6, 7, 7, 8, 8, 9, 10}));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) EXPECT_FALSE(are_isomorphic(f.members[i], f.members[j]));
}

TEST(PetersenFamily, ContainsTheNamedGraphs) {
    const PetersenFamily& f = petersen_family();
    EXPECT_EQ(f.index_of(complete_graph(6)), 0);
    EXPECT_GE(f.index_of(complete_multipartite({1, 3, 3})), 0);
    EXPECT_GE(f.index_of(k44_minus()), 0);
    EXPECT_GE(f.index_of(k6_delta_y()), 0);
    EXPECT_EQ(f.index_of(petersen_graph()), 6);
    EXPECT_EQ(f.index_of(complete_bipartite(3, 3)), -1);
    EXPECT_EQ(recognize_named_graph(f.members[0]), "K6");
    EXPECT_EQ(recognize_named_graph(f.members[6]), "petersen");
    EXPECT_EQ(recognize_named_graph(cycle_graph(5)), "");
}

TEST(PetersenFamily, ClosedUnderBothTransformations) {
    const PetersenFamily& f = petersen_family();
    for (const Graph& g : f.members) {
        for (const auto& t : triangles(g)) EXPECT_GE(f.index_of(delta_y(g, t)), 0);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 3) continue;
            Graph h = y_delta(g, v);
            EXPECT_EQ(h.edge_count(), 15);
            EXPECT_GE(f.index_of(h), 0);
        }
    }
}

TEST(PetersenFamily, GenerationIsDeterministic) {
    PetersenFamily a = generate_petersen_family();
    PetersenFamily b = generate_petersen_family();
    EXPECT_EQ(a.canonical_bytes, b.canonical_bytes);
    EXPECT_EQ(a.canonical_bytes, petersen_family().canonical_bytes);
}
