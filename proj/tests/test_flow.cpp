#include <gtest/gtest.h>

#include <random>

#include "endgraph/families.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/presentation.hpp"
#include "oracles.hpp"

using namespace endgraph;

namespace {

LevelledDigraph small(const std::vector<std::string>& names,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
  DigraphBuilder b("small", 0, 0);
  for (const auto& n : names) b.add_vertex({n, {}}, 0);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Vertex> ids(const LevelledDigraph& g, std::initializer_list<const char*> tags) {
  std::vector<Vertex> r;
  for (auto t : tags) r.push_back(g.at(t));
  return r;
}

}  // namespace

TEST(Flow, PathCountsOnTinyDigraphs) {
  auto g = small({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto ps = max_disjoint_dipaths(g, ids(g, {"a"}), ids(g, {"c"}), Disjointness::vertex);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(g.path_tags(ps.paths[0]), (std::vector<std::string>{"a", "b", "c"}));

  auto two = small({"a", "x", "y", "c"}, {{"a", "x"}, {"x", "c"}, {"a", "y"}, {"y", "c"}});
  EXPECT_EQ(max_disjoint_dipaths(two, ids(two, {"a"}), ids(two, {"c"}), Disjointness::internal).size(), 2u);
  EXPECT_EQ(max_disjoint_dipaths(two, ids(two, {"a"}), ids(two, {"c"}), Disjointness::vertex).size(), 1u);
}

TEST(Flow, EdgeDisjointExamples) {
  auto tri = small({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(max_edge_disjoint_dipaths(tri, ids(tri, {"a"}), ids(tri, {"c"})).size(), 2u);
  auto diamond = small({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "c"}, {"c", "d"}});
  const auto ps = max_edge_disjoint_dipaths(diamond, ids(diamond, {"a"}), ids(diamond, {"d"}));
  EXPECT_EQ(ps.size(), 2u);
  EXPECT_FALSE(check_path_system(diamond, ps));
  auto cut = min_edge_separator(diamond, ids(diamond, {"a"}), ids(diamond, {"d"}));
  EXPECT_EQ(cut.edges.size(), 2u);
  EXPECT_FALSE(check_edge_separator(diamond, cut));
}

TEST(Flow, SharedTerminalGivesTrivialPath) {
  auto g = small({"a", "b"}, {{"a", "b"}});
  auto ps = max_disjoint_dipaths(g, ids(g, {"a", "b"}), ids(g, {"b"}), Disjointness::internal);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps.paths[0], Path{g.at("b")});
}

TEST(Flow, SeparatorExamples) {
  auto g = small({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto cert = min_vertex_separator(g, ids(g, {"a"}), ids(g, {"c"}), {});
  EXPECT_EQ(cert.separator.size(), 1u);
  EXPECT_EQ(cert.separator, VertexSet{g.at("a")});  // closest to the sources
  EXPECT_FALSE(check_separator(g, cert));

  auto k22 = small({"s1", "s2", "t1", "t2"},
                   {{"s1", "t1"}, {"s1", "t2"}, {"s2", "t1"}, {"s2", "t2"}});
  auto c2 = min_vertex_separator(k22, ids(k22, {"s1", "s2"}), ids(k22, {"t1", "t2"}), {});
  EXPECT_EQ(c2.separator.size(), 2u);
  EXPECT_EQ(oracle::min_separator(k22, ids(k22, {"s1", "s2"}), ids(k22, {"t1", "t2"}), {}), 2);
}

TEST(Flow, SeparatorInfeasibleWhenEdgeJoinsProtectedEnds) {
  auto g = small({"a", "c"}, {{"a", "c"}});
  const auto ac = ids(g, {"a", "c"});
  EXPECT_THROW(min_vertex_separator(g, ids(g, {"a"}), ids(g, {"c"}), ac), InfeasibleError);
}

TEST(Flow, FanExamples) {
  DigraphBuilder b("star", 0, 0);
  b.add_vertex({"v", {}}, 0);
  std::vector<Vertex> leaves;
  for (int i = 0; i < 4; ++i) {
    leaves.push_back(b.add_vertex({"l" + std::to_string(i), {}}, 0));
    b.add_edge("v", "l" + std::to_string(i));
  }
  auto star = std::move(b).build();
  EXPECT_EQ(fan(star, star.at("v"), leaves, 10).size(), 4u);
  EXPECT_THROW(fan(star, star.at("v"), std::vector<Vertex>{star.at("v")}, 3), PreconditionError);

  auto single = small({"v", "w", "x", "y"}, {{"v", "w"}, {"w", "x"}, {"w", "y"}});
  EXPECT_EQ(fan(single, single.at("v"), ids(single, {"w", "x", "y"}), 3).size(), 1u);
}

TEST(Flow, FanFromBottomLeftOfExample52IsTwo) {
  const auto g = truncate(example52(), 10);
  std::vector<Vertex> row;
  for (Level j = 0; j <= 10; ++j) row.push_back(g.at("b" + std::to_string(j)));
  const auto ps = fan(g, g.at("c0"), row, 3);
  EXPECT_EQ(ps.size(), 2u);
  EXPECT_FALSE(check_path_system(g, ps, std::vector<Vertex>{g.at("c0")}, row));
}

TEST(Flow, ThresholdStopsEarly) {
  const auto g = truncate(krays(4), 6);
  const auto bottom = g.vertices_at(0);
  const auto top = g.vertices_at(6);
  EXPECT_EQ(max_flow_value(g, bottom, top, Disjointness::vertex), 4u);
  EXPECT_EQ(max_flow_value(g, bottom, top, Disjointness::vertex, {.limit = 2}), 2u);
}

TEST(Flow, BlockedVerticesAreRemoved) {
  auto g = small({"a", "x", "y", "c"}, {{"a", "x"}, {"x", "c"}, {"a", "y"}, {"y", "c"}});
  std::vector<bool> blocked(4, false);
  blocked[g.at("x")] = true;
  const auto ps = max_disjoint_dipaths(g, ids(g, {"a"}), ids(g, {"c"}), Disjointness::internal,
                                       {.blocked = &blocked});
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(g.path_tags(ps.paths[0]), (std::vector<std::string>{"a", "y", "c"}));
}

TEST(Flow, DeterministicWitnesses) {
  const auto g = truncate(example52(), 8);
  const auto a = g.vertices_at(0);
  const auto b = g.frontier();
  const auto p1 = max_disjoint_dipaths(g, a, b, Disjointness::vertex);
  const auto p2 = max_disjoint_dipaths(g, a, b, Disjointness::vertex);
  EXPECT_EQ(p1.paths, p2.paths);
}

TEST(FlowOracle, RandomDigraphsMatchBruteForce) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  std::uniform_real_distribution<double> density(0.15, 0.4);
  int with_two_paths = 0;
  for (int instance = 0; instance < 200; ++instance) {
    const auto n = size(rng);
    const auto g = oracle::random_digraph(rng, n, density(rng));
    const auto A = oracle::random_subset(rng, n, std::min<std::size_t>(3, n));
    const auto B = oracle::random_subset(rng, n, std::min<std::size_t>(3, n));
    SCOPED_TRACE("instance " + std::to_string(instance));
    for (auto mode : {Disjointness::vertex, Disjointness::internal, Disjointness::edge}) {
      const auto ps = max_disjoint_dipaths(g, A, B, mode);
      EXPECT_EQ(ps.size(), oracle::max_paths(g, A, B, mode)) << to_string(mode);
      EXPECT_FALSE(check_path_system(g, ps, A, B)) << to_string(mode);
      if (mode == Disjointness::vertex && ps.size() >= 2) ++with_two_paths;
    }
    const auto sep = min_vertex_separator(g, A, B, {});
    EXPECT_EQ(static_cast<int>(sep.separator.size()), oracle::min_separator(g, A, B, {}));
    EXPECT_FALSE(check_separator(g, sep));
    // Menger duality.
    EXPECT_EQ(sep.separator.size(), max_flow_value(g, A, B, Disjointness::vertex));

    std::vector<Vertex> terminals(A);
    terminals.insert(terminals.end(), B.begin(), B.end());
    const int protected_size = oracle::min_separator(g, A, B, terminals);
    if (protected_size < 0) {
      EXPECT_THROW(min_vertex_separator(g, A, B, terminals), InfeasibleError);
    } else {
      const auto ps = min_vertex_separator(g, A, B, terminals);
      EXPECT_EQ(static_cast<int>(ps.separator.size()), protected_size);
      EXPECT_EQ(ps.separator.size(), max_flow_value(g, A, B, Disjointness::internal));
    }
  }
  EXPECT_GT(with_two_paths, 30);
}

TEST(FlowOracle, AddingAnEdgeNeverLowersCounts) {
  std::mt19937 rng(7);
  for (int instance = 0; instance < 60; ++instance) {
    const std::size_t n = 7;
    const auto g = oracle::random_digraph(rng, n, 0.25);
    const auto A = oracle::random_subset(rng, n, 3);
    const auto B = oracle::random_subset(rng, n, 3);
    DigraphBuilder b("plus", 0, 0);
    for (Vertex v = 0; v < n; ++v) b.add_vertex(g.info(v).id, 0);
    for (auto [u, w] : g.edges()) b.add_edge(u, w);
    bool added = false;
    for (Vertex u = 0; u < n && !added; ++u) {
      for (Vertex w = 0; w < n && !added; ++w) {
        if (u != w && !g.has_edge(u, w)) {
          b.add_edge(u, w);
          added = true;
        }
      }
    }
    const auto h = std::move(b).build();
    for (auto mode : {Disjointness::vertex, Disjointness::internal, Disjointness::edge}) {
      EXPECT_LE(max_flow_value(g, A, B, mode), max_flow_value(h, A, B, mode));
    }
  }
}
