#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "netattack/generators.hpp"
#include "oracles.hpp"

namespace netattack {
namespace {

std::size_t expected_ba_edges(std::size_t n, std::size_t m) { return m * (m - 1) / 2 + (n - m) * m; }

TEST(GenerateBa, TenThousandNodeCounts) {
  const Graph g = generate_ba({10000, 2, 1});
  EXPECT_EQ(g.node_count(), 10000u);
  EXPECT_EQ(g.edge_count(), 19997u);
}

TEST(GenerateBa, SmallestCase) {
  const Graph g = generate_ba({2, 1, 42});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(GenerateBa, EdgeCountFormulaAndMinimumDegree) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n : {m + 1, m + 2, std::size_t{50}, std::size_t{333}}) {
      if (n <= m) continue;
      const Graph g = generate_ba({n, m, n * 31 + m});
      EXPECT_EQ(g.edge_count(), expected_ba_edges(n, m)) << "n=" << n << " m=" << m;
      for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
        if (static_cast<std::size_t>(v) >= m) EXPECT_GE(g.initial_degree(v), static_cast<int>(m));
        else EXPECT_GE(g.initial_degree(v), static_cast<int>(m) - 1);
      }
    }
  }
}

TEST(GenerateBa, SeedDeterministic) {
  EXPECT_EQ(generate_ba_edges({500, 3, 9}), generate_ba_edges({500, 3, 9}));
  EXPECT_NE(generate_ba_edges({500, 3, 9}), generate_ba_edges({500, 3, 10}));
}

TEST(GenerateBa, RejectsInvalidParams) {
  EXPECT_THROW((void)generate_ba({2, 2, 0}), std::invalid_argument);
  EXPECT_THROW((void)generate_ba({5, 0, 0}), std::invalid_argument);
  EXPECT_THROW((void)generate_ba({0, 1, 0}), std::invalid_argument);
}

TEST(GenerateBa, HubOfOrderAFewHundred) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = generate_ba({10000, 2, seed});
    EXPECT_GE(g.max_live_degree(), 100) << seed;
    EXPECT_LE(g.max_live_degree(), 1000) << seed;
  }
}

TEST(GenerateBa, WrittenEdgeListReloadsWithSameIds) {
  for (std::size_t m : {1u, 2u, 4u}) {
    const BaParams p{300, m, 77};
    std::stringstream buf;
    write_edge_list(buf, p.n, generate_ba_edges(p));
    const LoadedGraph loaded = load_edge_list(buf);
    EXPECT_EQ(loaded.graph.edges(), generate_ba(p).edges());
    for (std::size_t i = 0; i < loaded.labels.size(); ++i) EXPECT_EQ(loaded.labels[i], std::to_string(i));
  }
}

TEST(LoadEdgeList, PathGraph) {
  std::istringstream in("0 1\n1 2\n");
  const LoadedGraph g = load_edge_list(in);
  EXPECT_EQ(g.graph.node_count(), 3u);
  EXPECT_EQ(g.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(LoadEdgeList, CommentsDuplicatesAndLabels) {
  std::istringstream in("# comment\na b\n\n  \nb a\n");
  const LoadedGraph g = load_edge_list(in);
  EXPECT_EQ(g.graph.edge_count(), 1u);
  EXPECT_EQ(g.warnings.duplicate_edges, 1u);
  EXPECT_EQ(g.labels, (std::vector<std::string>{"a", "b"}));
}

TEST(LoadEdgeList, SelfLoopCountedAndTabsAccepted) {
  std::istringstream in("x\tx\r\nx\ty\r\n");
  const LoadedGraph g = load_edge_list(in);
  EXPECT_EQ(g.warnings.self_loops, 1u);
  EXPECT_EQ(g.graph.edge_count(), 1u);
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  std::istringstream one_field("0 1\n# c\n7\n");
  try {
    (void)load_edge_list(one_field);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream three_fields("0 1 2\n");
  EXPECT_THROW((void)load_edge_list(three_fields), ParseError);
}

TEST(LoadEdgeList, MissingFileIsRuntimeError) {
  EXPECT_THROW((void)load_edge_list_file("/nonexistent/edges.txt"), std::runtime_error);
}

TEST(LoadEdgeList, ReserializationEqualsDedupedInput) {
  for (std::uint32_t seed = 0; seed < 25; ++seed) {
    std::mt19937 rng(seed);
    std::set<std::pair<std::string, std::string>> unique;
    std::ostringstream text;
    for (int i = 0; i < 60; ++i) {
      const std::string a = "n" + std::to_string(rng() % 20);
      const std::string b = "n" + std::to_string(rng() % 20);
      text << a << ' ' << b << '\n';
      if (a != b) unique.insert(std::minmax(a, b));
    }
    std::istringstream in(text.str());
    const LoadedGraph g = load_edge_list(in);
    std::set<std::pair<std::string, std::string>> round;
    for (const auto& [u, v] : g.graph.edges()) {
      round.insert(std::minmax(g.labels[static_cast<std::size_t>(u)], g.labels[static_cast<std::size_t>(v)]));
    }
    EXPECT_EQ(round, unique);
  }
}

TEST(LabelTable, CsvQuoting) {
  std::ostringstream out;
  write_label_table(out, {"AS1", "a,b", "q\"x"});
  EXPECT_EQ(out.str(), "label,id\nAS1,0\n\"a,b\",1\n\"q\"\"x\",2\n");
}

TEST(DegreeHistogram, StarAndEmpty) {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  Graph g = Graph::build(4, e);
  EXPECT_EQ(degree_histogram(g), (std::vector<std::pair<int, std::size_t>>{{1, 3}, {3, 1}}));
  for (NodeId v = 0; v < 4; ++v) g.crash_node(v);
  EXPECT_TRUE(degree_histogram(g).empty());
}

TEST(DegreeHistogram, CountsSumToLiveNodes) {
  Graph g = generate_ba({2000, 3, 5});
  for (NodeId v = 0; v < 2000; v += 7) g.crash_node(v);
  std::size_t total = 0;
  int previous = -1;
  for (const auto& [deg, count] : degree_histogram(g)) {
    EXPECT_GT(deg, previous);
    previous = deg;
    total += count;
  }
  EXPECT_EQ(total, g.live_count());
}

}  // namespace
}  // namespace netattack
