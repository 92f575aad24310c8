#include <gtest/gtest.h>

#include <thread>

#include "artin/rep.hpp"
#include "artin/suites.hpp"

using namespace artin;
using P = LaurentPoly2;

namespace {

RootId root_id(const RootSystem& rs, std::vector<Coeff> c) { return rs.id(Root(std::move(c))); }

SparseVector vec(std::initializer_list<std::pair<RootId, P>> entries) {
  SparseVector v;
  for (const auto& [id, c] : entries) v.add(id, c);
  return v;
}

const VerificationReport::Family* family(const VerificationReport& r, const std::string& name) {
  for (const auto& f : r.families())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace

TEST(Tpoly, BaseCasesAndFirstStep) {
  RepContext ctx(graphs::dihedral(3));
  const RootSystem& rs = ctx.roots();
  EXPECT_EQ(ctx.tpoly(0, rs.simple(0)), P::y(2));
  EXPECT_TRUE(ctx.tpoly(0, rs.simple(1)).is_zero());
  const RootId sum = root_id(rs, {1, 1});
  EXPECT_EQ(ctx.tpoly(0, sum).to_string(), "-y^2 + y^3");
  EXPECT_EQ(ctx.tpoly(1, sum), P::y(2) * (P::y() - P(1)));
}

TEST(Tpoly, RejectsTriangles) {
  EXPECT_THROW(RepContext{graphs::cycle(3)}, DomainError);
  EXPECT_THROW(RepContext{graphs::dihedral(4)}, DomainError);
}

TEST(Tpoly, PolynomialInYWithBoundedDegree) {
  for (const auto& [g, depth] : std::vector<std::pair<CoxeterGraph, int>>{
           {graphs::type_a(3), 6}, {graphs::cycle(4), 6}, {graphs::type_d(4), 6}, {graphs::type_a(5), 5}}) {
    RepContext ctx(g);
    for (RootId beta : ctx.roots().positive_roots(depth))
      for (std::size_t s = 0; s < g.size(); ++s) {
        const P t = ctx.tpoly(static_cast<Vertex>(s), beta);
        EXPECT_TRUE(t.is_polynomial());
        EXPECT_FALSE(t.depends_on_x());
        if (!t.is_zero()) EXPECT_LE(t.y_degree(), ctx.roots().depth(beta) + 1);
      }
  }
}

TEST(Tpoly, ChoiceIndependence) {
  for (const auto& [g, depth] :
       std::vector<std::pair<CoxeterGraph, int>>{{graphs::type_a(3), 6}, {graphs::cycle(4), 5}, {graphs::type_d(4), 5}}) {
    const auto report = verify_tpoly_lemmas(RepContext(g), depth);
    EXPECT_TRUE(report.passed()) << report.to_text();
    EXPECT_GT(family(report, "choice independence, <alpha_s, beta> = 0")->instances +
                  family(report, "choice independence, <alpha_s, beta> < 0")->instances,
              0u);
  }
}

// A_5 has roots orthogonal to both ends of an edge, so this family is exercised.
TEST(Tpoly, OrthogonalRootsAgreeOnEdges) {
  const auto report = verify_tpoly_lemmas(RepContext(graphs::type_a(5)), 5);
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_GT(family(report, "T(s, beta) = T(t, beta) for orthogonal beta")->instances, 0u);
}

TEST(Phi, Examples) {
  RepContext ctx(graphs::dihedral(3));
  const RootSystem& rs = ctx.roots();
  const RootId as = rs.simple(0), at = rs.simple(1), sum = root_id(rs, {1, 1});
  EXPECT_TRUE(ctx.phi_basis(0, as).is_zero());
  EXPECT_EQ(ctx.phi_basis(0, at), vec({{at, P(1) - P::y()}, {sum, P(1)}}));
  EXPECT_EQ(ctx.phi_basis(0, sum), vec({{at, P::y()}}));

  RepContext commuting(graphs::dihedral(2));
  EXPECT_EQ(commuting.phi_basis(0, 1), SparseVector::basis(1));
}

TEST(Psi, Examples) {
  RepContext ctx(graphs::dihedral(3));
  const RootSystem& rs = ctx.roots();
  const RootId as = rs.simple(0), at = rs.simple(1), sum = root_id(rs, {1, 1});
  EXPECT_EQ(ctx.psi_basis(0, as), vec({{as, P::x() * P::y(2)}}));
  EXPECT_EQ(ctx.psi_basis(0, at), vec({{at, P(1) - P::y()}, {sum, P(1)}}));
  EXPECT_EQ(ctx.psi_basis(0, sum), vec({{at, P::y()}, {as, P::x() * (P::y(3) - P::y(2))}}));
  RepContext commuting(graphs::dihedral(2));
  EXPECT_EQ(commuting.psi_basis(0, 1), SparseVector::basis(1));
  EXPECT_EQ(ctx.psi_word_apply({}, SparseVector::basis(sum)), SparseVector::basis(sum));
}

TEST(Rho, Examples) {
  RepContext ctx(graphs::dihedral(3));
  const RootId as = ctx.roots().simple(0);
  EXPECT_EQ(ctx.rho_basis(0, as), vec({{as, P::monomial(-1, -2)}}));
  RepContext commuting(graphs::dihedral(2));
  EXPECT_EQ(commuting.rho_basis(0, 1), SparseVector::basis(1));
}

TEST(Psi, Serialization) {
  RepContext ctx(graphs::dihedral(3));
  const RootSystem& rs = ctx.roots();
  const auto v = ctx.psi_basis(0, root_id(rs, {1, 1}));
  EXPECT_EQ(vector_to_string(rs, v), R"({"{\"s\":1}":"-x^1*y^2 + x^1*y^3","{\"t\":1}":"y^1"})");
}

TEST(Psi, RelationsAndInverses) {
  for (const auto& [g, depth] :
       std::vector<std::pair<CoxeterGraph, int>>{{graphs::type_a(3), 6}, {graphs::cycle(4), 4}, {graphs::type_d(4), 4}}) {
    RepContext ctx(g);
    const auto rel = verify_relations(ctx, depth);
    EXPECT_TRUE(rel.passed()) << rel.to_text();
    EXPECT_GT(rel.instances(), 0u);
    const auto inv = verify_inverse(ctx, depth);
    EXPECT_TRUE(inv.passed()) << inv.to_text();
  }
}

TEST(Psi, A2RelationCount) {
  const auto rel = verify_relations(RepContext(graphs::dihedral(3)), 3);
  EXPECT_TRUE(rel.passed());
  EXPECT_EQ(rel.instances(), 3u);
}

// Braid-equivalent words act identically.
TEST(Psi, BraidClassesActIdentically) {
  const auto g = graphs::cycle(4);
  RepContext ctx(g);
  BraidOracle oracle(g);
  for (const Word& f : all_words(g, 4)) {
    const auto& members = oracle.members(f);
    for (RootId beta : {RootId{0}, RootId{2}}) {
      const auto expected = ctx.psi_word_apply(f, SparseVector::basis(beta));
      for (const Word& w : members) EXPECT_EQ(ctx.psi_word_apply(w, SparseVector::basis(beta)), expected);
    }
  }
}

TEST(Psi, MonoidActsByPolynomials) {
  const auto g = graphs::cycle(4);
  RepContext ctx(g);
  for (const Word& f : all_words(g, 5))
    for (Vertex s = 0; s < 4; ++s) {
      const auto image = ctx.psi_word_apply(f, SparseVector::basis(ctx.roots().simple(s)));
      for (const auto& [beta, c] : image.entries())
        EXPECT_TRUE(c.is_polynomial()) << format_word(g, f) << ": " << c.to_string();
    }
}

TEST(Psi, XZeroIsPhi) {
  const auto g = graphs::type_a(3);
  RepContext ctx(g);
  for (const Word& f : all_words(g, 4))
    for (RootId beta : ctx.roots().positive_roots(3)) {
      const auto psi = ctx.psi_word_apply(f, SparseVector::basis(beta));
      SparseVector specialized;
      for (const auto& [id, c] : psi.entries()) specialized.add(id, c.at_x_zero());
      EXPECT_EQ(specialized, ctx.phi_word_apply(f, SparseVector::basis(beta)));
    }
}

TEST(Psi, ConcurrentMemoIsDeterministic) {
  RepContext ctx(graphs::cycle(4));
  const auto basis = ctx.roots().positive_roots(5);
  std::vector<std::vector<P>> results(4);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < 4; ++i)
    workers.emplace_back([&, i] {
      for (RootId beta : basis) results[i].push_back(ctx.tpoly(static_cast<Vertex>(i), beta));
    });
  for (auto& w : workers) w.join();
  RepContext fresh(ctx.shared_roots());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) EXPECT_EQ(results[i][k], fresh.tpoly(static_cast<Vertex>(i), basis[k]));
}
