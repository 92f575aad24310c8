#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "artin/fold.hpp"

using namespace artin;

namespace {

Word product(const std::vector<Vertex>& vs) { return Word(vs.begin(), vs.end()); }

CoxeterGraph edge(int m) { return graphs::dihedral(m); }

// A proper two-colouring exists.
bool bipartite(const CoxeterGraph& g) {
  std::vector<int> colour(g.size(), -1);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        auto& c = colour[static_cast<std::size_t>(w)];
        if (c < 0) {
          c = 1 - colour[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (c == colour[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

void expect_morphism_shape(const FoldMorphism& phi, std::size_t per_generator) {
  std::vector<int> owner(phi.target.size(), -1);
  for (std::size_t s = 0; s < phi.source.size(); ++s) {
    const auto& image = phi.image(static_cast<Vertex>(s));
    EXPECT_EQ(image.size(), per_generator);
    for (Vertex i : image) {
      EXPECT_EQ(owner[static_cast<std::size_t>(i)], -1);
      owner[static_cast<std::size_t>(i)] = static_cast<int>(s);
      for (Vertex j : image)
        if (i != j) EXPECT_EQ(phi.target.label(i, j), 2);
    }
  }
  for (int o : owner) EXPECT_GE(o, 0);
}

}  // namespace

TEST(Gadget, GammaM) {
  for (int m : {3, 4, 5, 6}) {
    const Gadget gm = build_gamma_m(m);
    EXPECT_EQ(gm.graph.size(), static_cast<std::size_t>(2 * (m - 1)));
    EXPECT_EQ(gm.i_side.size(), static_cast<std::size_t>(m - 1));
    EXPECT_EQ(gm.j_side.size(), static_cast<std::size_t>(m - 1));
    EXPECT_EQ(gm.graph.edges().size(), static_cast<std::size_t>(2 * (m - 2)));
    EXPECT_TRUE(is_spherical(gm.graph));
    EXPECT_TRUE(bipartite(gm.graph));
    for (Vertex i : gm.i_side)
      for (Vertex j : gm.i_side)
        if (i != j) EXPECT_EQ(gm.graph.label(i, j), 2);
  }
  EXPECT_EQ(delta(build_gamma_m(4).graph, all_vertices(build_gamma_m(4).graph)).size(), 12u);
  EXPECT_THROW(build_gamma_m(2), DomainError);
  EXPECT_THROW(build_gamma_m(kInfinity), DomainError);
}

// prod(f, g; m) = prod(g, f; m) = Delta for f, g the products over I and J.
TEST(Gadget, ProductsOfSidesGiveDelta) {
  for (int m : {3, 4}) {
    const Gadget gm = build_gamma_m(m);
    const Word f = product(gm.i_side), g = product(gm.j_side);
    const Word d = delta(gm.graph, all_vertices(gm.graph));
    EXPECT_TRUE(monoid_eq_bfs(gm.graph, prod_word(f, g, m), d)) << m;
    EXPECT_TRUE(monoid_eq_bfs(gm.graph, prod_word(g, f, m), d)) << m;
    RootSystem rs(gm.graph);
    EXPECT_TRUE(eq_via_decode(rs, prod_word(f, g, m), d));
    EXPECT_FALSE(eq_via_decode(rs, prod_word(f, g, m - 1), prod_word(g, f, m - 1)));
  }
  const Gadget two = disjoint_copies(2, build_gamma_m(3));
  RootSystem rs(two.graph);
  const Word f = product(two.i_side), g = product(two.j_side);
  EXPECT_TRUE(eq_via_decode(rs, prod_word(f, g, 3), delta(two.graph, all_vertices(two.graph))));
  EXPECT_TRUE(eq_via_decode(rs, prod_word(g, f, 3), delta(two.graph, all_vertices(two.graph))));
}

TEST(Gadget, GammaInfinity) {
  const Gadget gi = build_gamma_inf();
  EXPECT_EQ(gi.graph.size(), 4u);
  EXPECT_EQ(gi.graph.edges().size(), 4u);
  EXPECT_TRUE(is_small_type(gi.graph));
  EXPECT_FALSE(is_spherical(gi.graph));
  const auto r = lcm(gi.graph, product(gi.i_side), product(gi.j_side), 20);
  EXPECT_FALSE(r.exists);
}

TEST(Gadget, DisjointCopies) {
  const auto g = graphs::type_a(2);
  const auto one = disjoint_copies(1, g);
  EXPECT_EQ(one.size(), 2u);
  EXPECT_EQ(one.edges().size(), 1u);
  EXPECT_EQ(disjoint_copies(2, build_gamma_m(3)).graph.size(), 8u);
  EXPECT_THROW(disjoint_copies(0, g), DomainError);
}

TEST(Fold, Modulus) {
  EXPECT_EQ(fold_modulus(edge(3)), 2);
  EXPECT_EQ(fold_modulus(edge(4)), 3);
  EXPECT_EQ(fold_modulus(edge(5)), 4);
  EXPECT_EQ(fold_modulus(edge(kInfinity)), 1);
  EXPECT_EQ(fold_modulus(edge(2)), 1);
  CoxeterGraph mixed({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 5}});
  EXPECT_EQ(fold_modulus(mixed), 12);
}

TEST(Fold, SingleEdges) {
  const std::vector<std::pair<int, std::size_t>> sizes{{3, 8}, {4, 12}, {5, 16}, {kInfinity, 4}};
  for (const auto& [m, n] : sizes) {
    const auto phi = fold_once(edge(m));
    EXPECT_EQ(phi.target.size(), n) << m;
    expect_morphism_shape(phi, n / 2);
    EXPECT_TRUE(is_small_type(phi.target));
    EXPECT_TRUE(has_no_triangle(phi.target));
    EXPECT_TRUE(bipartite(phi.target));
    const auto report = check_respects_lcm(phi);
    EXPECT_TRUE(report.passed()) << report.to_text();
  }
  // m = 3: N = 2 and four A_2 components.
  const auto phi = fold_once(edge(3));
  EXPECT_EQ(phi.target.edges().size(), 4u);
  const auto isolated = fold_once(edge(2));
  EXPECT_EQ(isolated.target.size(), 4u);
  EXPECT_TRUE(isolated.target.edges().empty());
}

TEST(Fold, NamesAndJson) {
  const auto phi = fold_once(edge(3));
  const auto doc = morphism_to_json(phi);
  EXPECT_EQ(doc["map"]["s"], nlohmann::json({"s#0", "s#1", "s#2", "s#3"}));
  EXPECT_EQ(parse_graph(doc["target"].dump()), phi.target);
}

TEST(Fold, TwiceGivesSmallTypeWithoutTriangles) {
  const std::vector<std::pair<int, std::size_t>> sizes{{3, 32}, {4, 48}, {5, 64}, {kInfinity, 16}};
  for (const auto& [m, n] : sizes) {
    const auto phi = fold_to_small_no_triangle(edge(m));
    EXPECT_EQ(phi.target.size(), n) << m;
    EXPECT_TRUE(is_small_type(phi.target));
    EXPECT_TRUE(has_no_triangle(phi.target));
    expect_morphism_shape(phi, n / 2);
  }
  const auto a3 = fold_to_small_no_triangle(graphs::type_a(3));
  EXPECT_TRUE(is_small_type(a3.target));
  EXPECT_TRUE(has_no_triangle(a3.target));
  const auto tri = fold_to_small_no_triangle(graphs::cycle(3));
  EXPECT_TRUE(has_no_triangle(tri.target));
}

TEST(Fold, CompositionAgreesWithSequentialApplication) {
  const auto g = edge(4);
  const auto first = fold_once(g);
  const auto second = fold_once(first.target);
  const auto both = compose(first, second);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Word f;
    for (int i = 0; i < trial % 6; ++i) f.push_back(letter(rng));
    const Word once = apply_morphism(first, f);
    EXPECT_EQ(once.size(), 6 * f.size());
    // Letters within one image commute, so compare as monoid elements.
    RootSystem rs(second.target);
    EXPECT_TRUE(eq_via_decode(rs, apply_morphism(second, once), apply_morphism(both, f)));
  }
  EXPECT_TRUE(apply_morphism(both, {}).empty());
  EXPECT_THROW(apply_morphism(first, {2}), DomainError);
  EXPECT_THROW(compose(second, first), DomainError);
}

TEST(Fold, BraidEquivalentWordsStayEquivalent) {
  const auto phi = fold_to_small_no_triangle(edge(3));
  RootSystem rs(phi.target);
  EXPECT_TRUE(eq_via_decode(rs, apply_morphism(phi, {0, 1, 0}), apply_morphism(phi, {1, 0, 1})));
  EXPECT_FALSE(eq_via_decode(rs, apply_morphism(phi, {0, 1}), apply_morphism(phi, {1, 0})));
}

TEST(Fold, RespectsLcmOnLargerGraphs) {
  CoxeterGraph mixed({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", kInfinity}});
  const auto phi = fold_once(mixed);
  EXPECT_TRUE(is_small_type(phi.target));
  const auto report = check_respects_lcm(phi);
  EXPECT_TRUE(report.passed()) << report.to_text();
}
