#include <gtest/gtest.h>

#include "artin/graph.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

CoxeterGraph chain(const std::vector<int>& labels) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (std::size_t i = 0; i <= labels.size(); ++i) v.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= 3) e.push_back({v[i], v[i + 1], labels[i]});
  return CoxeterGraph(v, e);
}

}  // namespace

TEST(Graph, ParsesAndSortsVertices) {
  auto g = parse_graph(R"({"vertices": ["t", "s"], "edges": [{"u": "s", "v": "t", "m": 3}]})");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.name(0), "s");
  EXPECT_EQ(g.label(0, 1), 3);
  EXPECT_EQ(g.label(1, 0), 3);
  EXPECT_EQ(g.label(0, 0), 1);
}

TEST(Graph, UnlistedPairsDefaultToTwo) {
  auto g = parse_graph(R"({"vertices": ["a", "b", "c"], "edges": [{"u": "a", "v": "b", "m": 4}]})");
  EXPECT_EQ(g.label(g.index("a"), g.index("c")), 2);
  EXPECT_TRUE(g.neighbors(g.index("c")).empty());
}

TEST(Graph, InfinityRoundTrips) {
  auto g = parse_graph(R"({"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": "inf"}]})");
  EXPECT_EQ(g.label(0, 1), kInfinity);
  EXPECT_EQ(parse_graph(emit_graph(g)), g);
  EXPECT_EQ(graph_to_json(g)["edges"][0]["m"], "inf");
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(parse_graph("{not json"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["s", "s"]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["s"], "edges": [{"u": "s", "v": "x", "m": 3}]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["s"], "edges": [{"u": "s", "v": "s", "m": 3}]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 2}]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": 3},
                                                                  {"u": "t", "v": "s", "m": 4}]})"),
               ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices": ["s", "t"], "edges": [{"u": "s", "v": "t", "m": "big"}]})"), ParseError);
  EXPECT_THROW(parse_graph(R"([1, 2])"), ParseError);
}

TEST(Graph, SmallTypeAndTriangles) {
  EXPECT_TRUE(is_small_type(graphs::type_a(3)));
  EXPECT_FALSE(is_small_type(graphs::dihedral(4)));
  EXPECT_FALSE(is_small_type(graphs::dihedral(kInfinity)));
  EXPECT_TRUE(has_no_triangle(graphs::cycle(4)));
  EXPECT_FALSE(has_no_triangle(graphs::cycle(3)));
  EXPECT_TRUE(has_no_triangle(graphs::type_d(4)));
}

TEST(Graph, InducedSubgraphKeepsLabels) {
  auto g = graphs::type_a(4);
  auto h = g.induced({g.index("2"), g.index("3")});
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.label(0, 1), 3);
}

TEST(Spherical, ClassificationExamples) {
  EXPECT_TRUE(is_spherical(graphs::type_a(5)));
  EXPECT_TRUE(is_spherical(graphs::type_d(4)));
  EXPECT_TRUE(is_spherical(graphs::type_d(6)));
  EXPECT_FALSE(is_spherical(graphs::cycle(4)));
  EXPECT_FALSE(is_spherical(graphs::cycle(3)));
  EXPECT_TRUE(is_spherical(graphs::dihedral(7)));
  EXPECT_FALSE(is_spherical(graphs::dihedral(kInfinity)));
  EXPECT_TRUE(is_spherical(chain({4, 3})));     // B3
  EXPECT_TRUE(is_spherical(chain({5, 3})));     // H3
  EXPECT_TRUE(is_spherical(chain({5, 3, 3})));  // H4
  EXPECT_TRUE(is_spherical(chain({3, 4, 3})));  // F4
  EXPECT_FALSE(is_spherical(chain({4, 4})));
  EXPECT_FALSE(is_spherical(chain({5, 4})));
  EXPECT_FALSE(is_spherical(chain({3, 5, 3})));
  EXPECT_FALSE(is_spherical(chain({3, 3, 4, 3})));  // affine F4
  EXPECT_TRUE(is_spherical(graphs::dihedral(2)));
  // Subsets of a non-spherical graph can be spherical.
  auto c = graphs::cycle(4);
  EXPECT_TRUE(is_spherical(c, std::vector<std::string>{"1", "2", "3"}));
  EXPECT_TRUE(is_spherical(c, std::vector<Vertex>{}));
}

TEST(Spherical, ExceptionalTrees) {
  auto tree = [](int a, int b, int c) {
    // Three arms of a, b, c extra vertices around a centre.
    std::vector<std::string> v{"c"};
    std::vector<Edge> e;
    int id = 0;
    for (int arm : {a, b, c}) {
      std::string prev = "c";
      for (int i = 0; i < arm; ++i) {
        std::string name = "x" + std::to_string(id++);
        v.push_back(name);
        e.push_back({prev, name, 3});
        prev = name;
      }
    }
    return CoxeterGraph(v, e);
  };
  EXPECT_TRUE(is_spherical(tree(1, 2, 2)));   // E6
  EXPECT_TRUE(is_spherical(tree(1, 2, 3)));   // E7
  EXPECT_TRUE(is_spherical(tree(1, 2, 4)));   // E8
  EXPECT_FALSE(is_spherical(tree(2, 2, 2)));  // affine E6
  EXPECT_FALSE(is_spherical(tree(1, 3, 3)));  // affine E7
  EXPECT_FALSE(is_spherical(tree(1, 2, 5)));  // affine E8
  EXPECT_TRUE(is_spherical(tree(1, 1, 5)));   // D8
}

// Classification agrees with orbit enumeration on every labelled graph with
// three vertices and labels in {2, 3, 4, 5, 6, inf}.
TEST(Spherical, MatchesOrbitEnumerationOnRankThree) {
  const std::vector<int> labels{2, 3, 4, 5, 6, kInfinity};
  for (int a : labels)
    for (int b : labels)
      for (int c : labels) {
        std::vector<Edge> e;
        if (a >= 3) e.push_back({"p", "q", a});
        if (b >= 3) e.push_back({"q", "r", b});
        if (c >= 3) e.push_back({"r", "p", c});
        CoxeterGraph g({"p", "q", "r"}, e);
        const bool finite = oracle::group_order(g).has_value();
        EXPECT_EQ(is_spherical(g), finite) << emit_graph(g);
      }
}

TEST(Spherical, MatchesOrbitEnumerationOnTrees) {
  const std::vector<std::vector<int>> chains{{3, 3, 3}, {4, 3, 3}, {3, 4, 3}, {5, 3, 3}, {3, 3, 4}, {4, 3, 4}, {3, 5, 3}};
  for (const auto& ls : chains) {
    const auto g = chain(ls);
    EXPECT_EQ(is_spherical(g), oracle::group_order(g, 50000).has_value()) << emit_graph(g);
  }
}

TEST(Spherical, GroupOrdersOfSmallCases) {
  EXPECT_EQ(oracle::group_order(graphs::type_a(3)), 24u);
  EXPECT_EQ(oracle::group_order(graphs::dihedral(5)), 10u);
}
