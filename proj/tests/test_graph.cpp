#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "colpart/graph.hpp"

using namespace colpart;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST(ParseGraphSpec, PathTwo) {
    const auto g = parse_graph_spec("path:2");
    EXPECT_EQ(g.vertex_count(), 2);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(ParseGraphSpec, CompleteThree) {
    const auto g = parse_graph_spec("complete:3");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(ParseGraphSpec, CycleIsPathPlusClosingEdge) {
    const auto g = parse_graph_spec("cycle:5");
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
}

TEST(ParseGraphSpec, RejectsBadSpecs) {
    for (const char* bad : {"path:0", "complete:0", "cycle:2", "cycle:1", "path:", "path:x", "path:-1", "path",
                            "triangle:3", "path:2x", "", "file:"}) {
        EXPECT_THROW(parse_graph_spec(bad), parse_error) << bad;
    }
}

TEST(ParseGraphSpec, CycleThreeEqualsCompleteThree) {
    EXPECT_EQ(parse_graph_spec("cycle:3"), parse_graph_spec("complete:3"));
}

TEST(BaseGraph, EdgeOrderIsCanonical) {
    EXPECT_EQ(BaseGraph(3, {{2, 0}, {1, 0}}), BaseGraph(3, {{0, 1}, {0, 2}}));
    EXPECT_FALSE(BaseGraph(3, {{0, 1}}) == BaseGraph(4, {{0, 1}}));
}

TEST(BaseGraph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(BaseGraph(3, {{1, 1}}), parse_error);
    EXPECT_THROW(BaseGraph(3, {{0, 1}, {1, 0}}), parse_error);
    EXPECT_THROW(BaseGraph(3, {{0, 3}}), parse_error);
    EXPECT_THROW(BaseGraph(0, {}), parse_error);
}

TEST(EdgeList, ReadsFile) {
    const auto p = write_temp("colpart_square.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    EXPECT_EQ(parse_graph_spec("file:" + p.string()), parse_graph_spec("cycle:4"));
    std::filesystem::remove(p);
}

TEST(EdgeList, IsolatedVertices) {
    std::istringstream in("3\n");
    const auto g = read_edge_list(in);
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_TRUE(g.edges().empty());
}

TEST(EdgeList, RejectsInvalidContent) {
    for (const char* body : {"", "0\n", "x\n", "3\n0 1\n1 0\n", "3\n2 2\n", "3\n0 5\n", "3\n0 1\n2\n", "3\n0 a\n"}) {
        std::istringstream in(body);
        EXPECT_THROW(read_edge_list(in), parse_error) << '"' << body << '"';
    }
}

TEST(EdgeList, UnreadableFile) {
    EXPECT_THROW(parse_graph_spec("file:/nonexistent/colpart/graph.txt"), parse_error);
}

TEST(ProductAdjacent, Examples) {
    const auto k3 = BaseGraph::complete(3);
    EXPECT_TRUE(product_adjacent(k3, 2, {0, 1}, {0, 2}));
    EXPECT_TRUE(product_adjacent(k3, 2, {0, 1}, {1, 1}));
    EXPECT_FALSE(product_adjacent(k3, 2, {0, 1}, {1, 2}));
    EXPECT_FALSE(product_adjacent(k3, 2, {0, 1}, {0, 1}));
}

TEST(ProductAdjacent, OutOfRangeIsContractViolation) {
    const auto k3 = BaseGraph::complete(3);
    EXPECT_THROW(product_adjacent(k3, 2, {2, 0}, {0, 0}), contract_violation);
    EXPECT_THROW(product_adjacent(k3, 2, {0, 3}, {0, 0}), contract_violation);
    EXPECT_THROW(product_adjacent(k3, 2, {0, 0}, {-1, 0}), contract_violation);
    EXPECT_THROW(product_adjacent(k3, 0, {0, 0}, {0, 0}), contract_violation);
}

// L_{m,n} has m(n-1) + n(m-1) edges; count them both from the edge list and
// by testing every vertex pair.
TEST(ProductGraph, GridEdgeCount) {
    for (int m = 1; m <= 6; ++m) {
        const auto g = BaseGraph::path(m);
        for (int n = 1; n <= 6; ++n) {
            const std::size_t expected = static_cast<std::size_t>(m * (n - 1) + n * (m - 1));
            EXPECT_EQ(product_edges(g, n).size(), expected) << m << "x" << n;
            std::size_t pairs = 0;
            for (int a = 0; a < m * n; ++a) {
                for (int b = a + 1; b < m * n; ++b) {
                    pairs += product_adjacent(g, n, {a / m, a % m}, {b / m, b % m}) ? 1 : 0;
                }
            }
            EXPECT_EQ(pairs, expected) << m << "x" << n;
        }
    }
}
