#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "artin/error.hpp"
#include "artin/graph.hpp"
#include "artin/roots.hpp"

namespace artin {

// A word over the vertex set; read as an element of W or of the Artin monoid
// depending on context.
using Word = std::vector<Vertex>;

// ---------------------------------------------------------------------------
// Words as whitespace separated vertex identifiers.

inline Word parse_word(const CoxeterGraph& g, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto v = g.find(tok);
    if (!v) throw ParseError("word uses unknown vertex '" + tok + "'");
    w.push_back(*v);
  }
  return w;
}

inline std::string format_word(const CoxeterGraph& g, const Word& w) {
  std::string out;
  for (Vertex v : w) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out;
}

/// The canonical representation of an element w of a small-type W, stored as
/// the images of the simple roots under w and under w^{-1}. Left and right
/// multiplication by a generator are a column update on one matrix and a
/// reflection of every column on the other.
class Action {
 public:
  explicit Action(const CoxeterGraph& g) : g_(&g), n_(g.size()), fwd_(n_ * n_, 0), inv_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) fwd_[i * n_ + i] = inv_[i * n_ + i] = 1;
  }

  Action(const CoxeterGraph& g, const Word& w) : Action(g) {
    for (Vertex s : w) right_multiply(s);
  }

  // w -> w s
  void right_multiply(Vertex s) {
    update_columns(fwd_, s);
    reflect_columns(inv_, s);
  }

  // w -> s w
  void left_multiply(Vertex s) {
    reflect_columns(fwd_, s);
    update_columns(inv_, s);
  }

  // l(s w) < l(w)  <=>  w^{-1} alpha_s is negative.
  bool is_left_descent(Vertex s) const { return column_negative(inv_, s); }
  // l(w s) < l(w)  <=>  w alpha_s is negative.
  bool is_right_descent(Vertex s) const { return column_negative(fwd_, s); }

  // w(alpha_s) as a lattice vector.
  Root image(Vertex s) const { return column(fwd_, s); }
  Root inverse_image(Vertex s) const { return column(inv_, s); }

  /// w applied to an arbitrary lattice vector.
  Root apply(const Root& v) const {
    Root out(n_);
    for (std::size_t t = 0; t < n_; ++t) {
      if (v.coeffs[t] == 0) continue;
      for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] += v.coeffs[t] * fwd_[t * n_ + i];
    }
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (fwd_[i * n_ + j] != (i == j ? 1 : 0)) return false;
    return true;
  }

  /// Lexicographically least reduced word: peel off the least left descent
  /// until the identity is reached.
  Word canonical_word() const {
    Action cur = *this;
    Word out;
    while (true) {
      Vertex pick = -1;
      for (std::size_t s = 0; s < n_; ++s)
        if (cur.is_left_descent(static_cast<Vertex>(s))) {
          pick = static_cast<Vertex>(s);
          break;
        }
      if (pick < 0) break;
      out.push_back(pick);
      cur.left_multiply(pick);
    }
    return out;
  }

  friend bool operator==(const Action& a, const Action& b) { return a.fwd_ == b.fwd_; }

 private:
  // Matrices are stored column-major: column t starts at t * n_.
  void update_columns(std::vector<Coeff>& m, Vertex s) {
    // column t <- column t - <alpha_s, alpha_t> column s
    const std::size_t cs = static_cast<std::size_t>(s) * n_;
    for (std::size_t i = 0; i < n_; ++i) m[cs + i] = -m[cs + i];
    for (Vertex t : g_->neighbors(s)) {
      const std::size_t ct = static_cast<std::size_t>(t) * n_;
      // s column is already negated: old_t + old_s = old_t - new_s
      for (std::size_t i = 0; i < n_; ++i) m[ct + i] -= m[cs + i];
    }
  }

  void reflect_columns(std::vector<Coeff>& m, Vertex s) {
    const auto& nb = g_->neighbors(s);
    const std::size_t row = static_cast<std::size_t>(s);
    for (std::size_t t = 0; t < n_; ++t) {
      Coeff* col = &m[t * n_];
      Coeff next = -col[row];
      for (Vertex r : nb) next += col[static_cast<std::size_t>(r)];
      col[row] = next;
    }
  }

  bool column_negative(const std::vector<Coeff>& m, Vertex s) const {
    const Coeff* col = &m[static_cast<std::size_t>(s) * n_];
    for (std::size_t i = 0; i < n_; ++i)
      if (col[i] != 0) return col[i] < 0;
    return false;
  }

  Root column(const std::vector<Coeff>& m, Vertex s) const {
    const auto begin = m.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(s) * n_);
    return Root(std::vector<Coeff>(begin, begin + static_cast<std::ptrdiff_t>(n_)));
  }

  const CoxeterGraph* g_;
  std::size_t n_;
  std::vector<Coeff> fwd_;
  std::vector<Coeff> inv_;
};

/// An element of W, identified by its lexicographically least reduced word.
class GroupElement {
 public:
  GroupElement() = default;

  const Word& word() const { return canonical_; }
  std::size_t length() const { return canonical_.size(); }
  bool is_identity() const { return canonical_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  // Only meaningful for words already known to be canonical.
  static GroupElement from_canonical(Word w) {
    GroupElement e;
    e.canonical_ = std::move(w);
    return e;
  }

 private:
  Word canonical_;
};

inline void require_small_type(const CoxeterGraph& g) {
  if (!is_small_type(g)) throw DomainError("group computations need a small-type graph");
}

inline void check_letters(const CoxeterGraph& g, const Word& w) {
  for (Vertex v : w)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw DomainError("word letter out of range");
}

inline GroupElement to_element(const Action& a) { return GroupElement::from_canonical(a.canonical_word()); }

/// Word problem: the canonical reduced representative of w.
inline GroupElement canonicalize(const CoxeterGraph& g, const Word& w) {
  require_small_type(g);
  check_letters(g, w);
  return to_element(Action(g, w));
}

inline std::size_t length(const GroupElement& e) { return e.length(); }

inline Action action_of(const CoxeterGraph& g, const GroupElement& e) { return Action(g, e.word()); }

inline GroupElement multiply(const CoxeterGraph& g, const GroupElement& a, const GroupElement& b) {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return canonicalize(g, w);
}

inline GroupElement inverse(const GroupElement& e) {
  // The reverse of a reduced word is reduced, but not necessarily least.
  Word w(e.word().rbegin(), e.word().rend());
  return GroupElement::from_canonical(std::move(w));
}

inline GroupElement inverse(const CoxeterGraph& g, const GroupElement& e) {
  Word w(e.word().rbegin(), e.word().rend());
  return canonicalize(g, w);
}

inline bool is_reduced(const CoxeterGraph& g, const Word& w) {
  Action a(g);
  for (Vertex s : w) {
    if (a.is_right_descent(s)) return false;
    a.right_multiply(s);
  }
  return true;
}

/// Phi_w = {beta > 0 : w^{-1} beta < 0}, built along the canonical word:
/// alpha_{s1}, s1 alpha_{s2}, s1 s2 alpha_{s3}, ...
inline std::vector<RootId> inversion_set(const RootSystem& rs, const GroupElement& e) {
  Action prefix(rs.graph());
  std::vector<RootId> out;
  for (Vertex s : e.word()) {
    out.push_back(rs.id(prefix.image(s)));
    prefix.right_multiply(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// u <= v in the weak order: l(v) = l(u) + l(u^{-1} v).
inline bool weak_le(const CoxeterGraph& g, const GroupElement& u, const GroupElement& v) {
  Word w(u.word().rbegin(), u.word().rend());
  w.insert(w.end(), v.word().begin(), v.word().end());
  return v.length() == u.length() + canonicalize(g, w).length();
}

/// w_T, the longest element of a finite standard parabolic subgroup.
inline GroupElement longest_element(const CoxeterGraph& g, const std::vector<Vertex>& subset) {
  require_small_type(g);
  if (!is_spherical(g, subset)) throw DomainError("longest element requested for a non-spherical subset");
  std::vector<Vertex> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  Action a(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex t : sorted)
      if (!a.is_right_descent(t)) {
        a.right_multiply(t);
        grew = true;
        break;
      }
  }
  return to_element(a);
}

/// tau: a reduced word read as a positive word.
inline Word tau(const GroupElement& e) { return e.word(); }

/// Every element of W of length <= max_length, ordered by (length, word).
inline std::vector<GroupElement> enumerate_elements(const CoxeterGraph& g, std::size_t max_length) {
  require_small_type(g);
  std::vector<GroupElement> out{GroupElement{}};
  std::vector<std::pair<Action, GroupElement>> frontier{{Action(g), GroupElement{}}};
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::map<Word, Action> next;
    for (const auto& [act, elt] : frontier)
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (act.is_right_descent(static_cast<Vertex>(s))) continue;
        Action a = act;
        a.right_multiply(static_cast<Vertex>(s));
        Word w = a.canonical_word();
        next.emplace(std::move(w), std::move(a));
      }
    frontier.clear();
    for (auto& [w, a] : next) {
      out.push_back(GroupElement::from_canonical(w));
      frontier.emplace_back(std::move(a), GroupElement::from_canonical(w));
    }
  }
  return out;
}

}  // namespace artin
