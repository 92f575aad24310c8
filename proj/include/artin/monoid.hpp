#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/graph.hpp"

namespace artin {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 14695981039346656037ull;
    for (Vertex v : w) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h ^ w.size();
  }
};

/// prod(a, b; m) = a b a b ... with m factors.
inline Word prod_word(const Word& a, const Word& b, int m) {
  if (m < 0) throw DomainError("prod needs m >= 0");
  Word out;
  for (int i = 0; i < m; ++i) {
    const Word& f = i % 2 == 0 ? a : b;
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---------------------------------------------------------------------------
// Braid-move closure. The defining relations are homogeneous, so the class of
// a positive word is the finite set of words reachable by rewriting one
// occurrence of prod(s,t;m) into prod(t,s;m) at a time.

inline std::vector<Word> braid_closure(const CoxeterGraph& g, const Word& w,
                                       std::size_t cap = kDefaultClosureCap) {
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Word cur = order[head];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Vertex a = cur[i];
      const Vertex b = cur[i + 1];
      if (a == b) continue;
      const int m = g.label(a, b);
      if (m == kInfinity || i + static_cast<std::size_t>(m) > cur.size()) continue;
      bool match = true;
      for (int k = 2; k < m && match; ++k)
        match = cur[i + static_cast<std::size_t>(k)] == (k % 2 == 0 ? a : b);
      if (!match) continue;
      Word next = cur;
      for (int k = 0; k < m; ++k) next[i + static_cast<std::size_t>(k)] = k % 2 == 0 ? b : a;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("braid closure exceeded " + std::to_string(cap) + " words");
        order.push_back(std::move(next));
      }
    }
  }
  return order;
}

/// Exact equality in the Artin monoid by exhausting the braid closure.
inline bool monoid_eq_bfs(const CoxeterGraph& g, const Word& f1, const Word& f2,
                          std::size_t cap = kDefaultClosureCap) {
  if (f1.size() != f2.size()) return false;
  if (f1 == f2) return true;
  for (const Word& w : braid_closure(g, f1, cap))
    if (w == f2) return true;
  return false;
}

/// Memoizing wrapper around braid closures: every word seen is mapped to its
/// class, stored once with its least word. Safe for concurrent use.
class BraidOracle {
 public:
  explicit BraidOracle(const CoxeterGraph& g, std::size_t cap = kDefaultClosureCap) : g_(g), cap_(cap) {}

  const CoxeterGraph& graph() const { return g_; }

  // All words of the class of w. The reference stays valid for the oracle's
  // lifetime.
  const std::vector<Word>& members(const Word& w) { return lookup(w).members; }

  Word representative(const Word& w) { return lookup(w).least; }

  std::vector<Word> closure(const Word& w) { return members(w); }

  bool equal(const Word& a, const Word& b) {
    return a.size() == b.size() && &lookup(a) == &lookup(b);
  }

  /// The h with d h = f, if d left-divides f. Cancels one letter at a time: s
  /// divides f iff some word of the class of f starts with s.
  std::optional<Word> quotient(const Word& d, Word f) {
    if (d.size() > f.size()) return std::nullopt;
    for (Vertex s : d) {
      bool found = false;
      for (const Word& w : members(f))
        if (!w.empty() && w.front() == s) {
          f.assign(w.begin() + 1, w.end());
          found = true;
          break;
        }
      if (!found) return std::nullopt;
    }
    return f;
  }

  bool left_divides(const Word& d, const Word& f) { return quotient(d, f).has_value(); }

 private:
  struct Class {
    std::vector<Word> members;
    Word least;
  };

  const Class& lookup(const Word& w) {
    {
      std::scoped_lock lock(mutex_);
      if (auto it = class_of_.find(w); it != class_of_.end()) return *it->second;
    }
    Class c;
    c.members = braid_closure(g_, w, cap_);
    c.least = *std::min_element(c.members.begin(), c.members.end());
    std::scoped_lock lock(mutex_);
    if (auto it = class_of_.find(w); it != class_of_.end()) return *it->second;
    classes_.push_back(std::move(c));
    const Class* stored = &classes_.back();
    for (const Word& word : stored->members) class_of_.emplace(word, stored);
    return *stored;
  }

  CoxeterGraph g_;
  std::size_t cap_;
  std::mutex mutex_;
  std::deque<Class> classes_;
  std::unordered_map<Word, const Class*, WordHash> class_of_;
};

inline bool left_divides_bfs(const CoxeterGraph& g, const Word& d, const Word& f,
                             std::size_t cap = kDefaultClosureCap) {
  BraidOracle oracle(g, cap);
  return oracle.left_divides(d, f);
}

/// L(f) by the greedy rule: extend w by the least s with l(ws) = l(w) + 1 and
/// tau(ws) dividing f, with divisibility decided on braid closures.
inline GroupElement L_bfs(BraidOracle& oracle, const Word& f) {
  const CoxeterGraph& g = oracle.graph();
  require_small_type(g);
  Action w(g);
  Word current;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t s = 0; s < g.size(); ++s) {
      const auto v = static_cast<Vertex>(s);
      if (w.is_right_descent(v)) continue;
      Word candidate = current;
      candidate.push_back(v);
      if (oracle.left_divides(candidate, f)) {
        w.right_multiply(v);
        current = std::move(candidate);
        grew = true;
        break;
      }
    }
  }
  return to_element(w);
}

inline GroupElement L_bfs(const CoxeterGraph& g, const Word& f, std::size_t cap = kDefaultClosureCap) {
  BraidOracle oracle(g, cap);
  return L_bfs(oracle, f);
}

// ---------------------------------------------------------------------------
// Small-type path: left-greedy normal forms computed in W.
//
// A positive word f has a unique factorization f = tau(u1) tau(u2) ... with
// u1 = L(f), u2 = L(tau(u1)^{-1} f), and so on. Since L(x g) = L(x tau(L(g))),
// left-multiplying a normal form by a simple tau(x) only needs the pairwise
// step  tau(x) tau(u) = tau(v) tau(r),  where v = x y for the largest prefix y
// of u that keeps x y reduced, and r = y^{-1} u. The remainder then moves on
// to the next factor.

using NormalForm = std::vector<GroupElement>;

namespace detail {

// tau(x) tau(u) = tau(v) tau(r); returns (v, r) as actions.
inline std::pair<Action, Action> simple_step(const CoxeterGraph& g, const Action& x, const Action& u) {
  Action xy = x;
  Action rest = u;  // y^{-1} u
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t t = 0; t < g.size(); ++t) {
      const auto v = static_cast<Vertex>(t);
      if (rest.is_left_descent(v) && !xy.is_right_descent(v)) {
        rest.left_multiply(v);
        xy.right_multiply(v);
        grew = true;
        break;
      }
    }
  }
  return {std::move(xy), std::move(rest)};
}

inline void left_multiply_nf(const CoxeterGraph& g, Action x, std::vector<Action>& nf) {
  std::vector<Action> out;
  out.reserve(nf.size() + 1);
  std::size_t i = 0;
  for (; i < nf.size() && !x.is_identity(); ++i) {
    auto [v, r] = simple_step(g, x, nf[i]);
    out.push_back(std::move(v));
    x = std::move(r);
  }
  for (; i < nf.size(); ++i) out.push_back(std::move(nf[i]));
  if (!x.is_identity()) out.push_back(std::move(x));
  nf = std::move(out);
}

inline std::vector<Action> normal_form_actions(const CoxeterGraph& g, const Word& f) {
  std::vector<Action> nf;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    Action x(g);
    x.right_multiply(*it);
    left_multiply_nf(g, std::move(x), nf);
  }
  return nf;
}

}  // namespace detail

/// Left-greedy normal form of a positive word over a small-type graph.
inline NormalForm normal_form(const CoxeterGraph& g, const Word& f) {
  require_small_type(g);
  check_letters(g, f);
  NormalForm out;
  for (const Action& a : detail::normal_form_actions(g, f)) out.push_back(to_element(a));
  return out;
}

inline Word normal_form_word(const NormalForm& nf) {
  Word out;
  for (const auto& u : nf) out.insert(out.end(), u.word().begin(), u.word().end());
  return out;
}

/// L(f): the largest w with tau(w) dividing f.
inline GroupElement L(const CoxeterGraph& g, const Word& f) {
  auto nf = normal_form(g, f);
  return nf.empty() ? GroupElement{} : nf.front();
}

inline bool monoid_eq_nf(const CoxeterGraph& g, const Word& f1, const Word& f2) {
  if (f1.size() != f2.size()) return false;
  return normal_form(g, f1) == normal_form(g, f2);
}

/// The h with d h = f, if any, on the small-type path: strip the normal form
/// factors of d one at a time from the head of the normal form of f.
inline std::optional<Word> quotient_nf(const CoxeterGraph& g, const Word& d, const Word& f) {
  require_small_type(g);
  if (d.size() > f.size()) return std::nullopt;
  Word rest = f;
  for (const GroupElement& piece : normal_form(g, d)) {
    auto nf = normal_form(g, rest);
    if (nf.empty() || !weak_le(g, piece, nf.front())) return std::nullopt;
    Word head(piece.word().rbegin(), piece.word().rend());
    head.insert(head.end(), nf.front().word().begin(), nf.front().word().end());
    rest = canonicalize(g, head).word();
    for (std::size_t i = 1; i < nf.size(); ++i)
      rest.insert(rest.end(), nf[i].word().begin(), nf[i].word().end());
  }
  return rest;
}

/// d left-divides f: small-type graphs use normal forms, others braid closures.
inline bool left_divides(const CoxeterGraph& g, const Word& d, const Word& f,
                         std::size_t cap = kDefaultClosureCap) {
  if (d.empty()) return true;
  if (is_small_type(g)) return quotient_nf(g, d, f).has_value();
  return left_divides_bfs(g, d, f, cap);
}

inline bool monoid_eq(const CoxeterGraph& g, const Word& f1, const Word& f2,
                      std::size_t cap = kDefaultClosureCap) {
  if (is_small_type(g)) return monoid_eq_nf(g, f1, f2);
  return monoid_eq_bfs(g, f1, f2, cap);
}

/// Delta_T = tau(w_T), the lcm of the generators in a spherical T.
inline Word delta(const CoxeterGraph& g, const std::vector<Vertex>& subset) {
  return tau(longest_element(g, subset));
}

// ---------------------------------------------------------------------------
// Least common multiples.

struct LcmResult {
  bool exists = false;
  Word word;  // valid when exists
};

/// f1 v f2. Returns exists = false only when nonexistence is proved: two
/// generators with label inf, or a set of generators dividing f1 or f2 whose
/// parabolic subgroup is infinite. Throws CapExceeded when the search up to
/// length_cap finds nothing.
inline LcmResult lcm(const CoxeterGraph& g, const Word& f1, const Word& f2, std::size_t length_cap,
                     std::size_t closure_cap = kDefaultClosureCap) {
  check_letters(g, f1);
  check_letters(g, f2);
  if (left_divides(g, f1, f2, closure_cap)) return {true, f2};
  if (left_divides(g, f2, f1, closure_cap)) return {true, f1};
  if (f1.size() == 1 && f2.size() == 1) {
    const int m = g.label(f1[0], f2[0]);
    if (m == kInfinity) return {false, {}};
    return {true, prod_word(f1, f2, m)};
  }
  // Any common multiple is a common multiple of every generator dividing f1
  // or f2, which needs a finite parabolic subgroup.
  std::vector<Vertex> descents;
  for (std::size_t s = 0; s < g.size(); ++s) {
    const Word letter{static_cast<Vertex>(s)};
    if (left_divides(g, letter, f1, closure_cap) || left_divides(g, letter, f2, closure_cap))
      descents.push_back(static_cast<Vertex>(s));
  }
  if (!is_spherical(g, descents)) return {false, {}};

  // Breadth-first over right multiples of f1, one class per element.
  const bool small = is_small_type(g);
  std::optional<BraidOracle> oracle;
  if (!small) oracle.emplace(g, closure_cap);
  auto key = [&](const Word& w) { return small ? normal_form_word(normal_form(g, w)) : oracle->representative(w); };
  std::vector<Word> frontier{f1};
  for (std::size_t len = f1.size(); len <= length_cap; ++len) {
    if (len >= f2.size())
      for (const Word& w : frontier)
        if (left_divides(g, f2, w, closure_cap)) return {true, w};
    std::set<Word> seen;
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (std::size_t s = 0; s < g.size(); ++s) {
        Word ext = w;
        ext.push_back(static_cast<Vertex>(s));
        if (seen.insert(key(ext)).second) next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }
  throw CapExceeded("no common multiple of length <= " + std::to_string(length_cap) + " found");
}

}  // namespace artin
