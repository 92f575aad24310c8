#include <gtest/gtest.h>

#include <map>
#include <random>

#include "artin/coxeter.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

std::vector<int> as_ints(const Word& w) { return std::vector<int>(w.begin(), w.end()); }

}  // namespace

TEST(Words, ParseAndFormat) {
  const auto g = graphs::type_a(3);
  EXPECT_EQ(parse_word(g, "1 2  3"), (Word{0, 1, 2}));
  EXPECT_TRUE(parse_word(g, "").empty());
  EXPECT_EQ(format_word(g, {2, 0}), "3 1");
  EXPECT_THROW(parse_word(g, "1 x"), ParseError);
}

TEST(Coxeter, CanonicalFormIsLeastReducedWord) {
  const auto g = graphs::type_a(2);
  EXPECT_EQ(canonicalize(g, {1, 0, 1}).word(), (Word{0, 1, 0}));
  EXPECT_TRUE(canonicalize(g, {0, 0}).is_identity());
  EXPECT_EQ(canonicalize(g, {1, 0}).word(), (Word{1, 0}));
}

// In A_3 the canonical word, length and weak order agree with permutations.
TEST(Coxeter, AgreesWithPermutationsInA3) {
  const auto g = graphs::type_a(3);
  const auto elements = enumerate_elements(g, 10);
  ASSERT_EQ(elements.size(), 24u);
  std::set<oracle::Perm> perms;
  for (const auto& e : elements) {
    const auto p = oracle::perm_of(3, as_ints(e.word()));
    perms.insert(p);
    EXPECT_EQ(e.length(), oracle::perm_length(p));
    EXPECT_TRUE(is_reduced(g, e.word()));
  }
  EXPECT_EQ(perms.size(), 24u);
  for (const auto& u : elements)
    for (const auto& v : elements)
      EXPECT_EQ(weak_le(g, u, v),
                oracle::perm_weak_le(oracle::perm_of(3, as_ints(u.word())), oracle::perm_of(3, as_ints(v.word()))))
          << format_word(g, u.word()) << " vs " << format_word(g, v.word());
}

TEST(Coxeter, WordProblemMatchesPermutations) {
  const auto g = graphs::type_a(4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> len(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    Word a, b;
    for (int i = len(rng); i > 0; --i) a.push_back(letter(rng));
    for (int i = len(rng); i > 0; --i) b.push_back(letter(rng));
    const bool same = oracle::perm_of(4, as_ints(a)) == oracle::perm_of(4, as_ints(b));
    EXPECT_EQ(canonicalize(g, a) == canonicalize(g, b), same);
    EXPECT_EQ(canonicalize(g, a).length(), oracle::perm_length(oracle::perm_of(4, as_ints(a))));
  }
}

TEST(Coxeter, MultiplyAndInverse) {
  const auto g = graphs::cycle(4);
  const auto a = canonicalize(g, {0, 1, 2});
  const auto b = canonicalize(g, {2, 1});
  EXPECT_EQ(multiply(g, a, b), canonicalize(g, {0}));
  const auto w = canonicalize(g, {0, 1, 2, 3, 0});
  EXPECT_TRUE(multiply(g, w, inverse(g, w)).is_identity());
  EXPECT_EQ(inverse(g, w).length(), w.length());
}

TEST(Coxeter, InversionSetHasLengthManyRoots) {
  const auto g = graphs::cycle(4);
  RootSystem rs(g);
  for (const auto& w : enumerate_elements(g, 5)) {
    const auto inv = inversion_set(rs, w);
    EXPECT_EQ(inv.size(), w.length());
    EXPECT_TRUE(std::adjacent_find(inv.begin(), inv.end()) == inv.end());
  }
}

TEST(Coxeter, LongestElements) {
  const auto a3 = graphs::type_a(3);
  EXPECT_EQ(longest_element(a3, all_vertices(a3)).length(), 6u);
  EXPECT_EQ(longest_element(graphs::type_d(4), all_vertices(graphs::type_d(4))).length(), 12u);
  EXPECT_EQ(longest_element(a3, {0, 2}).word(), (Word{0, 2}));
  EXPECT_THROW(longest_element(graphs::cycle(4), {0, 1, 2, 3}), DomainError);
  // Every generator is a right descent of w_0.
  const Action w0(a3, longest_element(a3, all_vertices(a3)).word());
  for (Vertex s = 0; s < 3; ++s) EXPECT_TRUE(w0.is_right_descent(s));
}

TEST(Coxeter, DescentsMatchLengthChange) {
  const auto g = graphs::type_d(4);
  for (const auto& w : enumerate_elements(g, 4)) {
    const Action a(g, w.word());
    for (Vertex s = 0; s < 4; ++s) {
      Word ws = w.word();
      ws.push_back(s);
      Word sw{s};
      sw.insert(sw.end(), w.word().begin(), w.word().end());
      EXPECT_EQ(a.is_right_descent(s), canonicalize(g, ws).length() < w.length());
      EXPECT_EQ(a.is_left_descent(s), canonicalize(g, sw).length() < w.length());
    }
  }
}

TEST(Coxeter, EnumerationCounts) {
  // Growth series of the affine group of type A_3: 1, 4, 10, 20, ...
  const auto elems = enumerate_elements(graphs::cycle(4), 3);
  std::map<std::size_t, int> by_len;
  for (const auto& e : elems) ++by_len[e.length()];
  EXPECT_EQ(by_len[0], 1);
  EXPECT_EQ(by_len[1], 4);
  EXPECT_EQ(by_len[2], 10);
  EXPECT_EQ(enumerate_elements(graphs::type_a(2), 10).size(), 6u);
}

TEST(Coxeter, RequiresSmallType) { EXPECT_THROW(canonicalize(graphs::dihedral(5), {0}), DomainError); }
