#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artin/error.hpp"

namespace artin {

using Vertex = int;

// Label of a pair joined by no relation at all.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct Edge {
  std::string u;
  std::string v;
  int m = 3;
};

/// A Coxeter graph: a finite vertex set S with labels m(s,t) in {2,3,...,inf}.
///
/// Vertices are kept in lexicographic order of their identifiers; a Vertex is
/// the position in that order. Pairs that are not listed carry the label 2.
/// Values are immutable once built.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  CoxeterGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw ParseError("duplicate vertex '" +
                       *std::adjacent_find(vertices.begin(), vertices.end()) + "'");
    names_ = std::move(vertices);
    const std::size_t n = names_.size();
    labels_.assign(n * n, 2);
    for (std::size_t i = 0; i < n; ++i) labels_[i * n + i] = 1;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges) {
      auto u = find(e.u);
      auto v = find(e.v);
      if (!u) throw ParseError("edge references unknown vertex '" + e.u + "'");
      if (!v) throw ParseError("edge references unknown vertex '" + e.v + "'");
      if (*u == *v) throw ParseError("self-loop on vertex '" + e.u + "'");
      if (e.m < 3)
        throw ParseError("edge " + e.u + "-" + e.v + " has label " + std::to_string(e.m) +
                         "; labels below 3 must be left implicit");
      auto key = std::minmax(*u, *v);
      if (!seen.insert(key).second && label(*u, *v) != e.m)
        throw ParseError("conflicting duplicate edge " + e.u + "-" + e.v);
      labels_[*u * n + *v] = e.m;
      labels_[*v * n + *u] = e.m;
    }
    adjacency_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && labels_[i * n + j] >= 3) adjacency_[i].push_back(static_cast<Vertex>(j));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex s) const { return names_.at(static_cast<std::size_t>(s)); }

  std::optional<Vertex> find(std::string_view id) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), id);
    if (it == names_.end() || *it != id) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
  }

  Vertex index(std::string_view id) const {
    if (auto v = find(id)) return *v;
    throw DomainError("unknown vertex '" + std::string(id) + "'");
  }

  // m(s,s) = 1.
  int label(Vertex s, Vertex t) const {
    return labels_[static_cast<std::size_t>(s) * size() + static_cast<std::size_t>(t)];
  }

  // Vertices joined to s by a label >= 3 (including inf).
  const std::vector<Vertex>& neighbors(Vertex s) const {
    return adjacency_[static_cast<std::size_t>(s)];
  }

  // Edges with u < v, in (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (labels_[i * size() + j] >= 3)
          out.push_back({names_[i], names_[j], labels_[i * size() + j]});
    return out;
  }

  /// Full subgraph on the given vertices.
  CoxeterGraph induced(const std::vector<Vertex>& subset) const {
    std::vector<std::string> ids;
    for (Vertex v : subset) ids.push_back(name(v));
    std::vector<Edge> es;
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b) {
        int m = label(subset[a], subset[b]);
        if (m >= 3) es.push_back({name(subset[a]), name(subset[b]), m});
      }
    return CoxeterGraph(std::move(ids), es);
  }

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// ---------------------------------------------------------------------------
// JSON interchange

inline CoxeterGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("graph document needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex identifiers must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("m"))
        throw ParseError("each edge needs \"u\", \"v\" and \"m\"");
      if (!e["u"].is_string() || !e["v"].is_string())
        throw ParseError("edge endpoints must be strings");
      Edge edge{e["u"].get<std::string>(), e["v"].get<std::string>(), 0};
      const auto& m = e["m"];
      if (m.is_string()) {
        if (m.get<std::string>() != "inf")
          throw ParseError("edge label must be an integer or \"inf\"");
        edge.m = kInfinity;
      } else if (m.is_number_integer()) {
        auto value = m.get<long long>();
        if (value < 3)
          throw ParseError("edge " + edge.u + "-" + edge.v +
                           " has label below 3; labels 2 must be implicit");
        if (value >= kInfinity) throw ParseError("edge label too large");
        edge.m = static_cast<int>(value);
      } else {
        throw ParseError("edge label must be an integer or \"inf\"");
      }
      edges.push_back(std::move(edge));
    }
  }
  return CoxeterGraph(std::move(vertices), edges);
}

inline CoxeterGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

inline nlohmann::json graph_to_json(const CoxeterGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::json m = e.m == kInfinity ? nlohmann::json("inf") : nlohmann::json(e.m);
    edges.push_back({{"u", e.u}, {"v", e.v}, {"m", m}});
  }
  return {{"vertices", g.names()}, {"edges", edges}};
}

inline std::string emit_graph(const CoxeterGraph& g) { return graph_to_json(g).dump(); }

// ---------------------------------------------------------------------------
// Structural predicates

inline bool is_small_type(const CoxeterGraph& g) {
  for (const Edge& e : g.edges())
    if (e.m != 3) return false;
  return true;
}

inline bool has_no_triangle(const CoxeterGraph& g) {
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t : g.neighbors(s)) {
      if (t <= s) continue;
      for (Vertex r : g.neighbors(t))
        if (r > t && g.label(s, r) >= 3) return false;
    }
  return true;
}

namespace detail {

// Connected components of the label >= 3 graph restricted to `subset`.
inline std::vector<std::vector<Vertex>> components(const CoxeterGraph& g,
                                                   const std::vector<Vertex>& subset) {
  std::set<Vertex> remaining(subset.begin(), subset.end());
  std::vector<std::vector<Vertex>> out;
  while (!remaining.empty()) {
    std::vector<Vertex> comp{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex t : g.neighbors(comp[i]))
        if (remaining.erase(t)) comp.push_back(t);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Classification of connected finite Coxeter graphs: A_n, B_n, D_n, E_6-8,
// F_4, H_3, H_4, I_2(m).
inline bool connected_is_spherical(const CoxeterGraph& g, const std::vector<Vertex>& comp) {
  const std::size_t k = comp.size();
  if (k == 1) return true;
  std::map<Vertex, std::vector<Vertex>> adj;
  std::size_t edge_count = 0;
  for (Vertex s : comp) {
    for (Vertex t : comp) {
      if (s == t || g.label(s, t) < 3) continue;
      if (g.label(s, t) == kInfinity) return false;
      adj[s].push_back(t);
      if (s < t) ++edge_count;
    }
  }
  if (edge_count != k - 1) return false;  // not a tree
  if (k == 2) return true;                 // I_2(m)

  std::vector<Vertex> branch;
  for (Vertex s : comp) {
    if (adj[s].size() >= 4) return false;
    if (adj[s].size() == 3) branch.push_back(s);
  }
  if (branch.size() > 1) return false;

  if (branch.empty()) {
    // A path: walk it from one end and read the labels in order.
    Vertex start = comp.front();
    for (Vertex s : comp)
      if (adj[s].size() == 1) {
        start = s;
        break;
      }
    std::vector<int> labels;
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex t : adj[cur])
        if (t != prev) next = t;
      if (next < 0) break;
      labels.push_back(g.label(cur, next));
      prev = cur;
      cur = next;
    }
    std::vector<std::size_t> heavy;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] > 3) heavy.push_back(i);
    if (heavy.empty()) return true;  // A_k
    if (heavy.size() > 1) return false;
    const std::size_t pos = heavy.front();
    const int m = labels[pos];
    const bool at_end = pos == 0 || pos + 1 == labels.size();
    if (m == 4) return at_end || (k == 4 && pos == 1);  // B_k, F_4
    if (m == 5) return at_end && (k == 3 || k == 4);    // H_3, H_4
    return false;
  }

  // One branch vertex of degree 3: all labels must be 3, arms decide D/E.
  for (Vertex s : comp)
    for (Vertex t : adj[s])
      if (g.label(s, t) != 3) return false;
  const Vertex centre = branch.front();
  std::vector<std::size_t> arms;
  for (Vertex first : adj[centre]) {
    std::size_t len = 1;
    Vertex prev = centre;
    Vertex cur = first;
    while (adj[cur].size() == 2) {
      Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return true;                      // D_n
  if (arms[0] == 1 && arms[1] == 2) return arms[2] >= 2 && arms[2] <= 4;  // E_6,7,8
  return false;
}

}  // namespace detail

/// Whether the standard parabolic subgroup W_T is finite, decided from the
/// classification of finite Coxeter groups.
inline bool is_spherical(const CoxeterGraph& g, const std::vector<Vertex>& subset) {
  for (Vertex v : subset)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw DomainError("vertex index out of range");
  for (const auto& comp : detail::components(g, subset))
    if (!detail::connected_is_spherical(g, comp)) return false;
  return true;
}

inline bool is_spherical(const CoxeterGraph& g, const std::vector<std::string>& subset) {
  std::vector<Vertex> idx;
  for (const auto& id : subset) idx.push_back(g.index(id));
  return is_spherical(g, idx);
}

inline std::vector<Vertex> all_vertices(const CoxeterGraph& g) {
  std::vector<Vertex> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

inline bool is_spherical(const CoxeterGraph& g) { return is_spherical(g, all_vertices(g)); }

// ---------------------------------------------------------------------------
// Named graphs used throughout the tests and the bundled data.

namespace graphs {

// Chain 1 - 2 - ... - n with all labels 3.
inline CoxeterGraph type_a(int n) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) e.push_back({std::to_string(i), std::to_string(i + 1), 3});
  return CoxeterGraph(v, e);
}

// Chain 1 - ... - (n-1) with an extra vertex n attached to n-2.
inline CoxeterGraph type_d(int n) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i < n - 1; ++i) e.push_back({std::to_string(i), std::to_string(i + 1), 3});
  e.push_back({std::to_string(n - 2), std::to_string(n), 3});
  return CoxeterGraph(v, e);
}

// Cycle 1 - 2 - ... - n - 1, all labels 3 (affine type A_{n-1}).
inline CoxeterGraph cycle(int n) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) e.push_back({std::to_string(i), std::to_string(i % n + 1), 3});
  return CoxeterGraph(v, e);
}

// Two vertices s, t with label m (m == 2 gives no edge).
inline CoxeterGraph dihedral(int m) {
  if (m == 2) return CoxeterGraph({"s", "t"}, {});
  return CoxeterGraph({"s", "t"}, {{"s", "t", m}});
}

}  // namespace graphs

}  // namespace artin
