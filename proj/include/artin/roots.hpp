#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "artin/error.hpp"
#include "artin/graph.hpp"

namespace artin {

using Coeff = std::int64_t;

/// An element of the root lattice: the coefficients of sum lambda_s alpha_s,
/// indexed by vertex. Used both for genuine roots and for intermediate
/// vectors; RootSystem decides membership.
struct Root {
  std::vector<Coeff> coeffs;

  Root() = default;
  explicit Root(std::size_t n) : coeffs(n, 0) {}
  explicit Root(std::vector<Coeff> c) : coeffs(std::move(c)) {}

  static Root simple(std::size_t n, Vertex s) {
    Root r(n);
    r.coeffs[static_cast<std::size_t>(s)] = 1;
    return r;
  }

  std::size_t size() const { return coeffs.size(); }
  Coeff operator[](Vertex s) const { return coeffs[static_cast<std::size_t>(s)]; }
  Coeff& operator[](Vertex s) { return coeffs[static_cast<std::size_t>(s)]; }

  Coeff height() const {
    Coeff h = 0;
    for (Coeff c : coeffs) h += c;
    return h;
  }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coeff c) { return c == 0; });
  }
  // Roots are sign-coherent, so the first nonzero entry decides.
  bool is_negative() const {
    for (Coeff c : coeffs)
      if (c != 0) return c < 0;
    return false;
  }
  bool is_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coeff c) { return c >= 0; });
  }

  Root& operator+=(const Root& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Root& operator-=(const Root& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator-(Root a) {
    for (Coeff& c : a.coeffs) c = -c;
    return a;
  }
  friend Root operator*(Coeff k, Root a) {
    for (Coeff& c : a.coeffs) c *= k;
    return a;
  }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Coeff c : r.coeffs) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

using RootId = std::uint32_t;

// <alpha_s, alpha_t> in small type: 2, 0 or -1.
inline Coeff simple_pairing(const CoxeterGraph& g, Vertex s, Vertex t) {
  if (s == t) return 2;
  return g.label(s, t) == 3 ? -1 : 0;
}

// <alpha_s, v> for an arbitrary lattice vector.
inline Coeff pairing_with_simple(const CoxeterGraph& g, Vertex s, const Root& v) {
  Coeff p = 2 * v[s];
  for (Vertex t : g.neighbors(s)) p -= v[t];
  return p;
}

// s(v) = v - <alpha_s, v> alpha_s; only coordinate s changes.
inline void reflect_in_place(const CoxeterGraph& g, Vertex s, Root& v) {
  Coeff next = -v[s];
  for (Vertex t : g.neighbors(s)) next += v[t];
  v[s] = next;
}

/// Positive roots of a small-type Coxeter graph, enumerated lazily by depth.
///
/// Every positive root gets a stable RootId on first contact. Depth levels are
/// produced breadth first: a root of depth d+1 is s(beta) for some beta of
/// depth d with <alpha_s, beta> < 0, and every such reflection raises the depth
/// by exactly one. Vectors met elsewhere are validated by descending through
/// reflections with positive pairing, which counts their depth, and are then
/// looked up after the horizon has been extended that far.
///
/// All members are safe to call concurrently; table growth is serialized.
class RootSystem {
 public:
  explicit RootSystem(CoxeterGraph g) : graph_(std::move(g)) {
    if (!is_small_type(graph_))
      throw DomainError("root systems are only supported for small-type graphs");
    std::scoped_lock lock(mutex_);
    std::vector<RootId> level;
    for (std::size_t s = 0; s < graph_.size(); ++s)
      level.push_back(intern_locked(Root::simple(graph_.size(), static_cast<Vertex>(s)), 1));
    levels_.push_back({});
    levels_.push_back(std::move(level));
  }

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.size(); }

  RootId simple(Vertex s) const { return static_cast<RootId>(s); }

  const Root& root(RootId id) const {
    std::scoped_lock lock(mutex_);
    return entries_[id].root;
  }

  int depth(RootId id) const {
    std::scoped_lock lock(mutex_);
    return entries_[id].depth;
  }

  Coeff pairing_simple(Vertex s, RootId id) const {
    std::scoped_lock lock(mutex_);
    return entries_[id].pairings[static_cast<std::size_t>(s)];
  }

  Coeff pairing(const Root& a, const Root& b) const {
    Coeff p = 0;
    for (std::size_t s = 0; s < rank(); ++s)
      if (a.coeffs[s] != 0) p += a.coeffs[s] * pairing_with_simple(graph_, static_cast<Vertex>(s), b);
    return p;
  }

  Coeff pairing(RootId a, RootId b) const { return pairing(root(a), root(b)); }

  /// s(beta) as a positive root, or nullopt when beta = alpha_s (s sends it to
  /// -alpha_s).
  std::optional<RootId> reflect(Vertex s, RootId id) const {
    std::scoped_lock lock(mutex_);
    RootId cached = entries_[id].reflections[static_cast<std::size_t>(s)];
    if (cached == kUnknown) {
      if (id == simple(s)) {
        cached = kNegative;
      } else {
        Root r = entries_[id].root;
        reflect_in_place(graph_, s, r);
        Coeff a = entries_[id].pairings[static_cast<std::size_t>(s)];
        int d = entries_[id].depth + (a > 0 ? -1 : a < 0 ? 1 : 0);
        cached = intern_locked(std::move(r), d);
      }
      entries_[id].reflections[static_cast<std::size_t>(s)] = cached;
    }
    if (cached == kNegative) return std::nullopt;
    return cached;
  }

  /// Looks up a lattice vector; nullopt when it is not a positive root.
  std::optional<RootId> find(const Root& v) const {
    if (v.size() != rank() || v.is_zero() || !v.is_nonnegative()) return std::nullopt;
    {
      std::scoped_lock lock(mutex_);
      if (auto it = index_.find(v); it != index_.end()) return it->second;
    }
    // Descend while some simple reflection lowers the root. A positive root
    // always reaches a simple root this way; any other vector never does.
    Root cur = v;
    int steps = 0;
    while (true) {
      if (!cur.is_nonnegative()) return std::nullopt;
      if (cur.height() == 1) break;
      bool moved = false;
      for (std::size_t s = 0; s < rank(); ++s) {
        if (pairing_with_simple(graph_, static_cast<Vertex>(s), cur) > 0) {
          reflect_in_place(graph_, static_cast<Vertex>(s), cur);
          moved = true;
          break;
        }
      }
      if (!moved) return std::nullopt;
      ++steps;
    }
    ensure_depth(steps + 1);
    std::scoped_lock lock(mutex_);
    if (auto it = index_.find(v); it != index_.end()) return it->second;
    throw InternalError("root of depth " + std::to_string(steps + 1) +
                        " missing from the enumeration");
  }

  RootId id(const Root& v) const {
    if (auto r = find(v)) return *r;
    throw DomainError("vector is not a positive root");
  }

  bool is_root(const Root& v) const { return find(v).has_value() || find(-v).has_value(); }

  /// Every positive root of depth <= max_depth, by depth, then coefficients
  /// in decreasing order.
  std::vector<RootId> positive_roots(int max_depth) const {
    ensure_depth(max_depth);
    std::vector<RootId> out;
    {
      std::scoped_lock lock(mutex_);
      for (int d = 1; d <= max_depth && d < static_cast<int>(levels_.size()); ++d)
        out.insert(out.end(), levels_[d].begin(), levels_[d].end());
    }
    sort_roots(out);
    return out;
  }

  // Order used for listings: depth first, then the coefficient vectors.
  void sort_roots(std::vector<RootId>& ids) const {
    std::sort(ids.begin(), ids.end(), [this](RootId a, RootId b) {
      int da = depth(a), db = depth(b);
      if (da != db) return da < db;
      // Higher coefficients on earlier vertices first: simple roots in vertex order.
      return root(b) < root(a);
    });
  }

  /// Extends the enumeration so that every root of depth <= d is known.
  /// Returns false if the root system turned out to be finite and is exhausted
  /// below d (the call is still complete).
  bool ensure_depth(int d) const {
    std::scoped_lock lock(mutex_);
    while (static_cast<int>(levels_.size()) <= d) {
      const auto& last = levels_.back();
      if (last.empty()) {
        levels_.push_back({});
        continue;
      }
      const int next_depth = static_cast<int>(levels_.size());
      std::vector<RootId> next;
      std::unordered_set<RootId> in_next;
      for (RootId id : last) {
        for (std::size_t s = 0; s < rank(); ++s) {
          if (entries_[id].pairings[s] >= 0) continue;
          Root r = entries_[id].root;
          reflect_in_place(graph_, static_cast<Vertex>(s), r);
          auto it = index_.find(r);
          RootId found = it == index_.end() ? intern_locked(std::move(r), next_depth) : it->second;
          if (entries_[found].depth == next_depth && in_next.insert(found).second)
            next.push_back(found);
        }
      }
      levels_.push_back(std::move(next));
    }
    return !levels_[static_cast<std::size_t>(d)].empty();
  }

  /// Whether the enumeration has shown the system to be finite: some level up
  /// to `probe` is empty.
  bool is_finite(int probe) const {
    ensure_depth(probe);
    std::scoped_lock lock(mutex_);
    for (int d = 1; d <= probe; ++d)
      if (levels_[static_cast<std::size_t>(d)].empty()) return true;
    return false;
  }

  std::size_t interned() const {
    std::scoped_lock lock(mutex_);
    return entries_.size();
  }

 private:
  static constexpr RootId kUnknown = 0xffffffffu;
  static constexpr RootId kNegative = 0xfffffffeu;

  struct Entry {
    Root root;
    int depth = 0;
    std::vector<Coeff> pairings;       // <alpha_s, root> for every s
    std::vector<RootId> reflections;  // cached s(root)
  };

  RootId intern_locked(Root r, int depth) const {
    if (auto it = index_.find(r); it != index_.end()) return it->second;
    Entry e;
    e.pairings.resize(rank());
    for (std::size_t s = 0; s < rank(); ++s)
      e.pairings[s] = pairing_with_simple(graph_, static_cast<Vertex>(s), r);
    e.reflections.assign(rank(), kUnknown);
    e.depth = depth;
    e.root = r;
    auto id = static_cast<RootId>(entries_.size());
    entries_.push_back(std::move(e));
    index_.emplace(std::move(r), id);
    return id;
  }

  CoxeterGraph graph_;
  mutable std::mutex mutex_;
  mutable std::deque<Entry> entries_;
  mutable std::unordered_map<Root, RootId, RootHash> index_;
  mutable std::vector<std::vector<RootId>> levels_;
};

/// r_beta(x) = x - <x, beta> beta.
inline Root reflect_by_root(const RootSystem& rs, const Root& beta, const Root& x) {
  return x - rs.pairing(x, beta) * beta;
}

inline Root reflect_simple(const RootSystem& rs, Vertex s, Root x) {
  reflect_in_place(rs.graph(), s, x);
  return x;
}

// ---------------------------------------------------------------------------
// Serialization: {"s": lambda_s, ...} with zero coefficients omitted.

inline nlohmann::json root_to_json(const CoxeterGraph& g, const Root& r) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t s = 0; s < r.size(); ++s)
    if (r.coeffs[s] != 0) out[g.name(static_cast<Vertex>(s))] = r.coeffs[s];
  return out;
}

inline Root root_from_json(const CoxeterGraph& g, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("root must be a JSON object");
  Root r(g.size());
  for (const auto& [key, value] : j.items()) {
    auto s = g.find(key);
    if (!s) throw ParseError("root references unknown vertex '" + key + "'");
    if (!value.is_number_integer()) throw ParseError("root coefficients must be integers");
    r[*s] = value.get<Coeff>();
  }
  return r;
}

// Compact human form, e.g. "a1+a2+2a3" using vertex names.
inline std::string root_to_string(const CoxeterGraph& g, const Root& r) {
  std::string out;
  for (std::size_t s = 0; s < r.size(); ++s) {
    Coeff c = r.coeffs[s];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += "a_" + g.name(static_cast<Vertex>(s));
  }
  return out.empty() ? "0" : out;
}

}  // namespace artin
