#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artin/closed.hpp"
#include "artin/error.hpp"
#include "artin/graph.hpp"
#include "artin/monoid.hpp"
#include "artin/report.hpp"
#include "artin/roots.hpp"

namespace artin {

/// A monoid morphism sigma_s -> prod_{i in I(s)} sigma_i between Artin
/// monoids. generator_map[s] lists I(s) in increasing target vertex order.
struct FoldMorphism {
  CoxeterGraph source;
  CoxeterGraph target;
  std::vector<std::vector<Vertex>> generator_map;

  const std::vector<Vertex>& image(Vertex s) const { return generator_map.at(static_cast<std::size_t>(s)); }
};

/// A bipartite gadget: a graph with its vertex set split into I and J.
struct Gadget {
  CoxeterGraph graph;
  std::vector<Vertex> i_side;
  std::vector<Vertex> j_side;
};

namespace detail {

// Two chains of length m - 1. Chain 1 puts odd positions in I, chain 2 puts
// them in J. Vertices are "a1".."a{m-1}" and "b1".."b{m-1}".
struct ChainLayout {
  // (chain, position, in I)
  std::vector<std::array<int, 3>> slots;
};

inline ChainLayout gamma_layout(int m) {
  ChainLayout out;
  for (int chain = 0; chain < 2; ++chain)
    for (int pos = 1; pos <= m - 1; ++pos) {
      const bool odd = pos % 2 == 1;
      out.slots.push_back({chain, pos, chain == 0 ? odd : !odd});
    }
  return out;
}

}  // namespace detail

/// Gamma(m): two disjoint A_{m-1} chains, bipartitioned so |I| = |J| = m - 1.
inline Gadget build_gamma_m(int m) {
  if (m < 3 || m == kInfinity) throw DomainError("Gamma(m) needs 3 <= m < inf");
  auto name = [](int chain, int pos) { return std::string(chain == 0 ? "a" : "b") + std::to_string(pos); };
  const auto layout = detail::gamma_layout(m);
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (const auto& slot : layout.slots) {
    names.push_back(name(slot[0], slot[1]));
    if (slot[1] > 1) edges.push_back({name(slot[0], slot[1] - 1), name(slot[0], slot[1]), 3});
  }
  Gadget out{CoxeterGraph(names, edges), {}, {}};
  for (const auto& slot : layout.slots)
    (slot[2] ? out.i_side : out.j_side).push_back(out.graph.index(name(slot[0], slot[1])));
  std::sort(out.i_side.begin(), out.i_side.end());
  std::sort(out.j_side.begin(), out.j_side.end());
  return out;
}

/// Gamma(inf): the 4-cycle i1 - j1 - i2 - j2 - i1, all labels 3.
inline Gadget build_gamma_inf() {
  CoxeterGraph g({"i1", "i2", "j1", "j2"},
                 {{"i1", "j1", 3}, {"j1", "i2", 3}, {"i2", "j2", 3}, {"j2", "i1", 3}});
  return Gadget{g, {g.index("i1"), g.index("i2")}, {g.index("j1"), g.index("j2")}};
}

/// k disjoint copies; vertex v of copy c is named "<v>@<c>".
inline CoxeterGraph disjoint_copies(int k, const CoxeterGraph& g) {
  if (k < 1) throw DomainError("disjoint_copies needs k >= 1");
  std::vector<std::string> names;
  for (int c = 0; c < k; ++c)
    for (const auto& n : g.names()) names.push_back(n + "@" + std::to_string(c));
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c)
    for (const Edge& e : g.edges()) edges.push_back({e.u + "@" + std::to_string(c), e.v + "@" + std::to_string(c), e.m});
  return CoxeterGraph(names, edges);
}

/// Same as disjoint_copies, also carrying the I/J sides.
inline Gadget disjoint_copies(int k, const Gadget& gadget) {
  Gadget out{disjoint_copies(k, gadget.graph), {}, {}};
  for (int c = 0; c < k; ++c) {
    for (Vertex v : gadget.i_side) out.i_side.push_back(out.graph.index(gadget.graph.name(v) + "@" + std::to_string(c)));
    for (Vertex v : gadget.j_side) out.j_side.push_back(out.graph.index(gadget.graph.name(v) + "@" + std::to_string(c)));
  }
  std::sort(out.i_side.begin(), out.i_side.end());
  std::sort(out.j_side.begin(), out.j_side.end());
  return out;
}

/// N = lcm{m - 1 : 3 <= m < inf}, and 1 when there is no such label.
inline long long fold_modulus(const CoxeterGraph& g) {
  long long n = 1;
  for (const Edge& e : g.edges())
    if (e.m != kInfinity) n = std::lcm(n, static_cast<long long>(e.m - 1));
  return n;
}

namespace detail {

// The vertices of I(s) still unused by the current pair, split by colour.
// colour(s#k) = k mod 2, so each I(s) has N vertices of each colour.
class ColourPools {
 public:
  ColourPools(std::size_t copies_per_vertex, std::size_t n_vertices) : pools_(n_vertices) {
    for (auto& p : pools_)
      for (std::size_t k = 0; k < copies_per_vertex; ++k) p[k % 2].push_back(k);
  }
  // Takes the next copy index of s, preferring the given colour.
  std::size_t take(Vertex s, int colour) {
    auto& p = pools_[static_cast<std::size_t>(s)];
    auto& pool = p[colour].empty() ? p[1 - colour] : p[colour];
    if (pool.empty()) throw InternalError("fold: generator image exhausted");
    const std::size_t k = pool.front();
    pool.pop_front();
    return k;
  }

 private:
  std::vector<std::array<std::deque<std::size_t>, 2>> pools_;
};

inline std::string copy_name(const CoxeterGraph& g, Vertex s, std::size_t k) {
  return g.name(s) + "#" + std::to_string(k);
}

}  // namespace detail

/// One fold: every generator s becomes 2N commuting generators s#0..s#{2N-1}.
/// For s < t with 3 <= m < inf the pair spans 2N/(m-1) copies of Gamma(m)
/// (I from s, J from t); for m = inf it spans N copies of Gamma(inf).
/// Chains take their I vertices in one colour and J vertices in the other, so
/// the target is two-coloured whenever the colour budgets allow it (always
/// when every finite label is 2 or 3).
inline FoldMorphism fold_once(const CoxeterGraph& g) {
  if (g.size() == 0) throw DomainError("cannot fold an empty graph");
  const long long n = fold_modulus(g);
  const std::size_t per = static_cast<std::size_t>(2 * n);

  std::vector<std::string> names;
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t k = 0; k < per; ++k) names.push_back(detail::copy_name(g, static_cast<Vertex>(s), k));
  auto vertex = [&](Vertex s, std::size_t k) { return detail::copy_name(g, s, k); };

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex s = g.index(e.u);
    const Vertex t = g.index(e.v);
    detail::ColourPools pools(per, g.size());
    if (e.m == kInfinity) {
      for (long long c = 0; c < n; ++c) {
        const int colour = static_cast<int>(c % 2);
        const std::string i1 = vertex(s, pools.take(s, colour));
        const std::string i2 = vertex(s, pools.take(s, colour));
        const std::string j1 = vertex(t, pools.take(t, 1 - colour));
        const std::string j2 = vertex(t, pools.take(t, 1 - colour));
        for (auto [a, b] : {std::pair{i1, j1}, {j1, i2}, {i2, j2}, {j2, i1}}) edges.push_back({a, b, 3});
      }
      continue;
    }
    const int m = e.m;
    const long long copies = 2 * n / (m - 1);
    for (long long c = 0; c < copies; ++c) {
      for (int chain = 0; chain < 2; ++chain) {
        // Odd chain length: both chains of a copy use opposite colours.
        // Even chain length: alternate copies so each colour is used equally.
        int colour = chain;
        if ((m - 1) % 2 == 1 && c % 2 == 1) colour = 1 - chain;
        std::vector<std::string> path;
        for (int pos = 1; pos <= m - 1; ++pos) {
          const bool in_i = (pos % 2 == 1) == (chain == 0);
          path.push_back(in_i ? vertex(s, pools.take(s, colour)) : vertex(t, pools.take(t, 1 - colour)));
        }
        for (std::size_t p = 0; p + 1 < path.size(); ++p) edges.push_back({path[p], path[p + 1], 3});
      }
    }
  }

  FoldMorphism out{g, CoxeterGraph(names, edges), {}};
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<Vertex> image;
    for (std::size_t k = 0; k < per; ++k)
      image.push_back(out.target.index(detail::copy_name(g, static_cast<Vertex>(s), k)));
    std::sort(image.begin(), image.end());
    out.generator_map.push_back(std::move(image));
  }
  return out;
}

/// second o first, composing generator images setwise.
inline FoldMorphism compose(const FoldMorphism& first, const FoldMorphism& second) {
  if (!(first.target == second.source)) throw DomainError("morphisms do not compose");
  FoldMorphism out{first.source, second.target, {}};
  for (const auto& image : first.generator_map) {
    std::vector<Vertex> combined;
    for (Vertex i : image) combined.insert(combined.end(), second.image(i).begin(), second.image(i).end());
    std::sort(combined.begin(), combined.end());
    out.generator_map.push_back(std::move(combined));
  }
  return out;
}

/// Two folds. The first gives a small-type graph, the second a bipartite one.
inline FoldMorphism fold_to_small_no_triangle(const CoxeterGraph& g) {
  FoldMorphism first = fold_once(g);
  FoldMorphism second = fold_once(first.target);
  return compose(first, second);
}

inline Word apply_morphism(const FoldMorphism& phi, const Word& f) {
  Word out;
  for (Vertex s : f) {
    if (s < 0 || static_cast<std::size_t>(s) >= phi.generator_map.size())
      throw DomainError("word letter outside the morphism source");
    out.insert(out.end(), phi.image(s).begin(), phi.image(s).end());
  }
  return out;
}

inline nlohmann::json morphism_to_json(const FoldMorphism& phi) {
  nlohmann::json map = nlohmann::json::object();
  for (std::size_t s = 0; s < phi.source.size(); ++s) {
    nlohmann::json image = nlohmann::json::array();
    for (Vertex i : phi.image(static_cast<Vertex>(s))) image.push_back(phi.target.name(i));
    map[phi.source.name(static_cast<Vertex>(s))] = image;
  }
  return {{"target", graph_to_json(phi.target)}, {"map", map}};
}

/// Checks, for every generator pair, that phi(sigma_s) is nontrivial, that
/// phi(prod(s, t; m)) equals Delta on the image support when m is finite, and
/// that the image support is non-spherical when m = inf.
inline VerificationReport check_respects_lcm(const FoldMorphism& phi, std::size_t cap = kDefaultClosureCap,
                                             const std::string& graph_id = "") {
  VerificationReport report("respects-lcm", graph_id, {{"cap", cap}});
  const CoxeterGraph& src = phi.source;
  const CoxeterGraph& tgt = phi.target;
  const bool decodable = is_small_type(tgt) && has_no_triangle(tgt);
  std::unique_ptr<RootSystem> rs;
  if (decodable) rs = std::make_unique<RootSystem>(tgt);

  report.declare("image of a generator is nontrivial");
  report.declare("image of prod(s,t;m) is Delta of the image support");
  report.declare("image support of an inf pair is non-spherical");
  for (std::size_t s = 0; s < src.size(); ++s) {
    const bool ok = !phi.image(static_cast<Vertex>(s)).empty();
    report.record("image of a generator is nontrivial", ok,
                  ok ? nlohmann::json{} : nlohmann::json{{"s", src.name(static_cast<Vertex>(s))}});
  }
  for (std::size_t si = 0; si < src.size(); ++si)
    for (std::size_t ti = si + 1; ti < src.size(); ++ti) {
      const auto s = static_cast<Vertex>(si);
      const auto t = static_cast<Vertex>(ti);
      const int m = src.label(s, t);
      std::vector<Vertex> support = phi.image(s);
      support.insert(support.end(), phi.image(t).begin(), phi.image(t).end());
      std::sort(support.begin(), support.end());
      nlohmann::json where{{"s", src.name(s)}, {"t", src.name(t)}, {"m", m == kInfinity ? nlohmann::json("inf") : nlohmann::json(m)}};
      if (m == kInfinity) {
        const bool ok = !is_spherical(tgt, support);
        report.record("image support of an inf pair is non-spherical", ok, ok ? nlohmann::json{} : where);
        continue;
      }
      if (!is_spherical(tgt, support)) {
        where["reason"] = "image support is not spherical";
        report.record("image of prod(s,t;m) is Delta of the image support", false, where);
        continue;
      }
      const Word lhs = apply_morphism(phi, prod_word({s}, {t}, m));
      const Word rhs = delta(tgt, support);
      try {
        const bool ok = decodable ? eq_via_decode(*rs, lhs, rhs) : monoid_eq_bfs(tgt, lhs, rhs, cap);
        if (!ok) where["reason"] = "words differ";
        report.record("image of prod(s,t;m) is Delta of the image support", ok, ok ? nlohmann::json{} : where);
      } catch (const CapExceeded& e) {
        where["reason"] = std::string("cap exceeded: ") + e.what();
        report.record("image of prod(s,t;m) is Delta of the image support", false, where);
      }
    }
  report.finish();
  return report;
}

}  // namespace artin
