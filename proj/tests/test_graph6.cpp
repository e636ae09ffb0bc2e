#include <gtest/gtest.h>

#include <random>

#include "linkless/graph6.hpp"
#include "linkless/named.hpp"

using namespace linkless;

namespace {

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

}  // namespace

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(to_graph6(build_graph(0, {})), "?");
    EXPECT_EQ(to_graph6(build_graph(1, {})), "@");
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})), "DQc");
    EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(to_graph6(petersen_graph()), "IheA@GUAo");
    EXPECT_EQ(to_graph6(complete_graph(6)), "E~~w");
}

TEST(Graph6, Decoding) {
    EXPECT_EQ(from_graph6("IheA@GUAo"), petersen_graph());
    EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
    EXPECT_EQ(from_graph6("DQc\r\n"), build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
}

TEST(Graph6, LongHeaderIsParsedThenRejectedAboveCapacity) {
    // A 63-vertex edgeless graph: 4 header bytes and 326 zero body bytes.
    std::string k63 = std::string("~??~") + std::string(63 * 62 / 2 / 6 + 1, '?');
    std::size_t pos = 0;
    EXPECT_EQ(graph6_header(k63, pos), 63);
    EXPECT_EQ(pos, 4u);
    EXPECT_THROW(from_graph6(k63), Graph6Error);
    std::size_t pos2 = 0;
    EXPECT_EQ(graph6_header("~?@E", pos2), 70);
    // 33 vertices fits the short header but exceeds the library bound.
    EXPECT_THROW(from_graph6(std::string(1, char(63 + 33)) + std::string(88, '?')), Graph6Error);
}

TEST(Graph6, MalformedInputs) {
    EXPECT_THROW(from_graph6(""), Graph6Error);
    EXPECT_THROW(from_graph6("C"), Graph6Error);            // body too short
    EXPECT_THROW(from_graph6("C~~"), Graph6Error);          // body too long
    EXPECT_THROW(from_graph6("C\x7f"), Graph6Error);        // byte out of range
    EXPECT_THROW(from_graph6("BA"), Graph6Error);           // nonzero padding (n=3 uses 3 of 6 bits)
    EXPECT_THROW(from_graph6("~?"), Graph6Error);           // truncated long header
}

TEST(Graph6, RoundTripOnRandomGraphs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng() % 33);
        std::bernoulli_distribution coin(static_cast<double>(rng() % 100) / 100.0);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g(n, edges);
        std::string s = to_graph6(g);
        EXPECT_EQ(from_graph6(s), g) << s;
        EXPECT_EQ(to_graph6(from_graph6(s)), s);
    }
    EXPECT_EQ(from_graph6(to_graph6(path_graph(32))), path_graph(32));
}
