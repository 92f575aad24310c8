#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/monoid.hpp"
#include "artin/rep.hpp"
#include "artin/roots.hpp"

namespace artin {

// A finite set of positive roots, by id.
using RootSet = std::set<RootId>;

/// Pairings >= -1 and the sum rule at pairing -1.
inline bool is_closed(const RootSystem& rs, const RootSet& a) {
  for (auto i = a.begin(); i != a.end(); ++i)
    for (auto j = std::next(i); j != a.end(); ++j) {
      const Coeff p = rs.pairing(*i, *j);
      if (p < -1) return false;
      if (p == -1) {
        auto sum = rs.find(rs.root(*i) + rs.root(*j));
        if (!sum || !a.count(*sum)) return false;
      }
    }
  return true;
}

inline RootSet inversion_root_set(const RootSystem& rs, const GroupElement& w) {
  auto ids = inversion_set(rs, w);
  return RootSet(ids.begin(), ids.end());
}

/// C(A): the largest w with Phi_w inside A, grown one generator at a time
/// (Phi_{ws} = Phi_w + {w(alpha_s)}).
inline GroupElement cmax(const RootSystem& rs, const RootSet& a) {
  const CoxeterGraph& g = rs.graph();
  Action w(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t s = 0; s < g.size(); ++s) {
      const auto v = static_cast<Vertex>(s);
      if (w.is_right_descent(v)) continue;
      auto id = rs.find(w.image(v));
      if (id && a.count(*id)) {
        w.right_multiply(v);
        grew = true;
        break;
      }
    }
  }
  return to_element(w);
}

/// sigma_s * A.
inline RootSet star(const RootSystem& rs, Vertex s, const RootSet& a) {
  RootSet out{rs.simple(s)};
  for (RootId beta : a) {
    const Coeff p = rs.pairing_simple(s, beta);
    if (p == 0) {
      out.insert(beta);
    } else if (p < 0) {
      const RootId up = *rs.reflect(s, beta);
      out.insert(up);
      if (a.count(up)) out.insert(beta);
    }
  }
  return out;
}

/// g * A, last letter first.
inline RootSet star_word(const RootSystem& rs, const Word& f, RootSet a) {
  check_letters(rs.graph(), f);
  for (auto it = f.rbegin(); it != f.rend(); ++it) a = star(rs, *it, a);
  return a;
}

/// The sequence u1, u2, ... with f = tau(u1) tau(u2) ..., where each u_i is
/// read off as C(f_i * empty) and then divided out.
inline std::vector<GroupElement> decode(const RootSystem& rs, const Word& f) {
  const CoxeterGraph& g = rs.graph();
  if (!has_no_triangle(g)) throw DomainError("decode needs a small-type graph with no triangle");
  check_letters(g, f);
  std::vector<GroupElement> out;
  Word rest = f;
  while (!rest.empty()) {
    GroupElement u = cmax(rs, star_word(rs, rest, {}));
    if (u.is_identity()) throw InternalError("decode: C(f * empty) is trivial for a nonempty word");
    auto q = quotient_nf(g, tau(u), rest);
    if (!q) throw InternalError("decode: tau(" + format_word(g, u.word()) + ") does not divide the word");
    out.push_back(std::move(u));
    rest = std::move(*q);
  }
  return out;
}

inline bool eq_via_decode(const RootSystem& rs, const Word& f1, const Word& f2) {
  if (f1.size() != f2.size()) return false;
  return decode(rs, f1) == decode(rs, f2);
}

// ---------------------------------------------------------------------------
// Cross-check of g * A against supports of psi at x = 0, y = y0.

/// Roots reachable from `seed` by at most k simple reflections.
inline RootSet reflection_ball(const RootSystem& rs, const RootSet& seed, std::size_t k) {
  RootSet ball = seed;
  RootSet frontier = seed;
  for (std::size_t step = 0; step < k; ++step) {
    RootSet next;
    for (RootId beta : frontier)
      for (std::size_t s = 0; s < rs.rank(); ++s)
        if (auto r = rs.reflect(static_cast<Vertex>(s), beta); r && !ball.count(*r)) next.insert(*r);
    ball.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return ball;
}

/// Positive support of psi(f)(e_beta) after setting x = 0, y = y0.
inline RootSet specialized_support(const RepContext& ctx, const Word& f, RootId beta, const Rational& y0) {
  RootSet out;
  const SparseVector image = ctx.psi_word_apply(f, SparseVector::basis(beta));
  for (const auto& [gamma, c] : image.entries())
    if (c.evaluate_at_x_zero(y0) > 0) out.insert(gamma);
  return out;
}

/// g * A computed as the complement of the union of Supp_g(e_beta) over beta
/// outside A, restricted to the roots within |f| reflections of A and the
/// simple roots (g * A always lies there). Only beta within |f| reflections of
/// a candidate can reach it, so the window is exact on the candidates.
inline RootSet star_word_via_support(const RepContext& ctx, const Word& f, const RootSet& a,
                                     const Rational& y0 = Rational(1, 2)) {
  const RootSystem& rs = ctx.roots();
  RootSet seed = a;
  for (std::size_t s = 0; s < rs.rank(); ++s) seed.insert(rs.simple(static_cast<Vertex>(s)));
  const RootSet candidates = reflection_ball(rs, seed, f.size());
  const RootSet sources = reflection_ball(rs, candidates, f.size());
  RootSet hit;
  for (RootId beta : sources) {
    if (a.count(beta)) continue;
    for (RootId gamma : specialized_support(ctx, f, beta, y0))
      if (candidates.count(gamma)) hit.insert(gamma);
  }
  RootSet out;
  for (RootId gamma : candidates)
    if (!hit.count(gamma)) out.insert(gamma);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization: arrays of root objects in (depth, lex) order.

inline nlohmann::json root_set_to_json(const RootSystem& rs, const RootSet& a) {
  std::vector<RootId> ids(a.begin(), a.end());
  rs.sort_roots(ids);
  nlohmann::json out = nlohmann::json::array();
  for (RootId id : ids) out.push_back(root_to_json(rs.graph(), rs.root(id)));
  return out;
}

inline RootSet root_set_from_json(const RootSystem& rs, const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("a closed set is a JSON array of roots");
  RootSet out;
  for (const auto& item : doc) {
    auto id = rs.find(root_from_json(rs.graph(), item));
    if (!id) throw DomainError("closed set member is not a positive root: " + item.dump());
    out.insert(*id);
  }
  return out;
}

/// Every closed subset of a finite root system, by brute force over subsets.
inline std::vector<RootSet> all_closed_subsets(const RootSystem& rs) {
  if (!rs.is_finite(static_cast<int>(4 * rs.rank() + 4)))
    throw DomainError("closed subsets can only be enumerated for a finite root system");
  const auto roots = rs.positive_roots(static_cast<int>(4 * rs.rank() + 4));
  if (roots.size() > 20) throw DomainError("too many positive roots to enumerate subsets");
  std::vector<RootSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size()); ++mask) {
    RootSet a;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (mask >> i & 1) a.insert(roots[i]);
    if (is_closed(rs, a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace artin
