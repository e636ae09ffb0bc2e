#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "linkless/canonical.hpp"
#include "linkless/named.hpp"
#include "linkless/transforms.hpp"
#include "oracles.hpp"

using namespace linkless;

namespace {

std::vector<Vertex> random_perm(std::mt19937_64& rng, int n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Graph random_graph(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution coin(static_cast<double>(rng() % 101) / 100.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

long long brute_automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) ok = g.has_edge(i, j) == g.has_edge(p[i], p[j]);
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace

TEST(CanonicalForm, PetersenRelabelingsAgree) {
    std::mt19937_64 rng(1);
    const Graph p = petersen_graph();
    const CanonicalForm base = canonical_form(p);
    for (int i = 0; i < 50; ++i) {
        CanonicalForm other = canonical_form(relabel(p, random_perm(rng, 10)));
        EXPECT_EQ(other.canonical_bytes, base.canonical_bytes);
    }
    EXPECT_EQ(base.automorphism_count, 120);
}

TEST(CanonicalForm, K33InterleavedAndC6) {
    Graph interleaved = complete_multipartite({3, 3});
    interleaved = relabel(interleaved, {0, 2, 4, 1, 3, 5});
    EXPECT_EQ(canonical_bytes(interleaved), canonical_bytes(complete_bipartite(3, 3)));
    EXPECT_NE(canonical_bytes(cycle_graph(6)), canonical_bytes(complete_bipartite(3, 3)));
}

TEST(CanonicalForm, CanonicalGraphIsAnIsomorphicCopy) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 9);
        CanonicalLabeling c = canonical_labeling(g);
        EXPECT_EQ(relabel(g, [&] {
                      std::vector<Vertex> inverse(g.vertex_count());
                      for (int i = 0; i < g.vertex_count(); ++i) inverse[c.order[i]] = i;
                      return inverse;
                  }()),
                  c.graph);
    }
}

TEST(AreIsomorphic, Examples) {
    EXPECT_TRUE(are_isomorphic(k6_delta_y(), delta_y(complete_graph(6), {0, 2, 4})));
    EXPECT_FALSE(are_isomorphic(complete_multipartite({1, 3, 3}), k44_minus()));
    Graph g = petersen_graph();
    EXPECT_FALSE(are_isomorphic(g, contract_edge(g, 0, 1)));
    // same degree sequence, not isomorphic: C6 vs two triangles
    Graph two_triangles = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
}

TEST(AreIsomorphic, AgreesWithBruteForceOnSmallPairs) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + trial % 7;
        Graph g = random_graph(rng, n);
        Graph h = trial % 3 == 0 ? relabel(g, random_perm(rng, n)) : random_graph(rng, n);
        EXPECT_EQ(are_isomorphic(g, h), oracle::isomorphic_brute(oracle::from_graph(g), oracle::from_graph(h)));
    }
}

TEST(AreIsomorphic, RegularGraphsThatRefinementCannotSplit) {
    // Two 3-regular graphs on 8 vertices: the cube and the Wagner graph
    // (8-cycle with long diagonals).
    Graph cube = build_graph(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    std::vector<Edge> wagner;
    for (int i = 0; i < 8; ++i) wagner.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) wagner.emplace_back(i, i + 4);
    Graph w = build_graph(8, wagner);
    EXPECT_FALSE(are_isomorphic(cube, w));
    std::mt19937_64 rng(2);
    EXPECT_TRUE(are_isomorphic(cube, relabel(cube, random_perm(rng, 8))));
    EXPECT_TRUE(are_isomorphic(w, relabel(w, random_perm(rng, 8))));
}

TEST(AutomorphismCount, KnownGroups) {
    EXPECT_EQ(automorphism_count(complete_graph(6)), 720);
    EXPECT_EQ(automorphism_count(cycle_graph(7)), 14);
    EXPECT_EQ(automorphism_count(complete_bipartite(3, 3)), 72);
    EXPECT_EQ(automorphism_count(build_graph(0, {})), 1);
    BigCount factorial32 = 1;
    for (int i = 2; i <= 32; ++i) factorial32 *= i;
    EXPECT_EQ(automorphism_count(build_graph(32, {})), factorial32);
}

TEST(AutomorphismCount, MatchesBruteForce) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 8);
        EXPECT_EQ(automorphism_count(g), brute_automorphisms(g)) << to_graph6(g);
    }
}

TEST(SameOrbit, Examples) {
    Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_TRUE(same_orbit(path, 0, 3));
    EXPECT_TRUE(same_orbit(path, 1, 2));
    EXPECT_FALSE(same_orbit(path, 0, 1));
    EXPECT_TRUE(same_orbit(petersen_graph(), 0, 7));
}

TEST(CanonicalProperties, RelabelingInvarianceThousandCases) {
    std::mt19937_64 rng(0x51ab);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n);
        Graph h = relabel(g, random_perm(rng, n));
        CanonicalForm a = canonical_form(g), b = canonical_form(h);
        failures += a.canonical_bytes != b.canonical_bytes || a.automorphism_count != b.automorphism_count;
    }
    EXPECT_EQ(failures, 0);
}

TEST(CanonicalProperties, EqualFormsOnlyForIsomorphicGraphsUpToSix) {
    // canonical bytes partition all labelled graphs on n <= 6 exactly like the
    // brute-force lexicographic minimum does
    oracle::CanonTable table(6);
    for (int n = 0; n <= 6; ++n) {
        std::map<std::string, std::uint32_t> seen;
        for (std::uint32_t k = 0; k < (1U << (n * (n - 1) / 2)); ++k) {
            oracle::Mat m = oracle::from_key(n, k);
            std::string c = canonical_bytes(oracle::to_graph(m));
            auto [it, fresh] = seen.emplace(c, table.canonical(m));
            EXPECT_EQ(it->second, table.canonical(m));
        }
        std::set<std::uint32_t> brute;
        for (auto& [c, b] : seen) brute.insert(b);
        EXPECT_EQ(brute.size(), seen.size());
    }
}
