#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/graph.hpp"
#include "artin/laurent.hpp"
#include "artin/report.hpp"
#include "artin/roots.hpp"

namespace artin {

/// A finitely supported vector sum_beta c_beta e_beta with Laurent polynomial
/// coefficients. Zero coefficients are never stored.
class SparseVector {
 public:
  using Entries = std::map<RootId, LaurentPoly2>;

  SparseVector() = default;
  static SparseVector basis(RootId beta) {
    SparseVector v;
    v.entries_.emplace(beta, LaurentPoly2(1));
    return v;
  }

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  LaurentPoly2 coefficient(RootId beta) const {
    auto it = entries_.find(beta);
    return it == entries_.end() ? LaurentPoly2{} : it->second;
  }

  void add(RootId beta, const LaurentPoly2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.emplace(beta, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  void add(const SparseVector& other, const LaurentPoly2& scale = LaurentPoly2(1)) {
    for (const auto& [beta, c] : other.entries_) add(beta, c * scale);
  }

  SparseVector& operator+=(const SparseVector& o) {
    add(o);
    return *this;
  }
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    SparseVector out = a;
    out.add(b, LaurentPoly2(-1));
    return out;
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Entries entries_;
};

/// The representation psi on V = span{e_beta : beta positive root} for a
/// small-type graph without triangles. Holds the memo table of T(s, beta).
class RepContext {
 public:
  explicit RepContext(std::shared_ptr<const RootSystem> roots) : roots_(std::move(roots)) {
    if (!has_no_triangle(roots_->graph()))
      throw DomainError("the representation needs a small-type graph with no triangle");
  }
  explicit RepContext(const CoxeterGraph& g) : RepContext(std::make_shared<const RootSystem>(g)) {}

  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> shared_roots() const { return roots_; }
  const CoxeterGraph& graph() const { return roots_->graph(); }

  /// T(s, beta), memoized. The reducing vertex is the least t with
  /// <alpha_t, beta> > 0.
  LaurentPoly2 tpoly(Vertex s, RootId beta) const {
    {
      std::scoped_lock lock(mutex_);
      if (auto it = memo_.find({s, beta}); it != memo_.end()) return it->second;
    }
    LaurentPoly2 value = tpoly_with_choice(s, beta, reducing_vertex(beta));
    std::scoped_lock lock(mutex_);
    memo_.emplace(std::make_pair(s, beta), value);
    return value;
  }

  /// The vertices t with dp(t beta) = dp(beta) - 1, i.e. <alpha_t, beta> > 0.
  std::vector<Vertex> admissible_choices(RootId beta) const {
    std::vector<Vertex> out;
    for (std::size_t t = 0; t < graph().size(); ++t)
      if (roots_->pairing_simple(static_cast<Vertex>(t), beta) > 0) out.push_back(static_cast<Vertex>(t));
    return out;
  }

  /// One step of the recursion with an explicit choice of t; every deeper
  /// value comes from tpoly(). For depth-1 roots t is ignored.
  LaurentPoly2 tpoly_with_choice(Vertex s, RootId beta, std::optional<Vertex> choice) const {
    const RootSystem& rs = *roots_;
    const int dp = rs.depth(beta);
    const LaurentPoly2 y = LaurentPoly2::y();
    const LaurentPoly2 one(1);
    if (dp == 1) return beta == rs.simple(s) ? LaurentPoly2::y(2) : LaurentPoly2{};
    if (!choice) throw InternalError("root of depth >= 2 without a reducing vertex");
    const Vertex t = *choice;
    const Coeff b = rs.pairing_simple(t, beta);
    if (b <= 0) throw DomainError("choice of t does not lower the depth");
    const Coeff sb = rs.pairing_simple(s, beta);
    if (sb > 0) return LaurentPoly2::y(dp) * (y - one);

    const RootId tb = *rs.reflect(t, beta);  // beta - b alpha_t
    const Coeff st = simple_pairing(graph(), s, t);
    const Root& vec = rs.root(beta);
    auto shifted = [&](Coeff cs, Coeff ct) {
      Root r = vec;
      r.coeffs[static_cast<std::size_t>(s)] -= cs;
      r.coeffs[static_cast<std::size_t>(t)] -= ct;
      if (auto id = rs.find(r)) return *id;
      throw InternalError("recursion for T(" + graph().name(s) + ", " + root_to_string(graph(), vec) +
                          ") references " + root_to_string(graph(), r) + ", which is not a positive root");
    };

    // <alpha_s, beta> = 0, split on whether s and t are joined.
    if (sb == 0) {
      if (st == 0) return y * tpoly(s, tb);
      return (y - one) * tpoly(s, tb) + y * tpoly(t, shifted(b, b));
    }
    // <alpha_s, beta> = -a < 0: compare a with b = <alpha_t, beta>.
    const Coeff a = -sb;
    if (st == 0) return y * tpoly(s, tb);
    if (b > a) return (y - one) * tpoly(s, tb) + y * tpoly(t, shifted(b - a, b));
    if (b == a) return tpoly(t, tb) + (y - one) * tpoly(s, tb);
    return y * tpoly(s, tb) + tpoly(t, tb) + LaurentPoly2::y(dp - 1) * (one - y);
  }

  /// phi_s(e_beta).
  SparseVector phi_basis(Vertex s, RootId beta) const {
    SparseVector out;
    const Coeff a = roots_->pairing_simple(s, beta);
    if (beta == roots_->simple(s)) return out;
    if (a == 0) {
      out.add(beta, LaurentPoly2(1));
    } else if (a > 0) {
      out.add(*roots_->reflect(s, beta), LaurentPoly2::y());
    } else {
      out.add(beta, LaurentPoly2(1) - LaurentPoly2::y());
      out.add(*roots_->reflect(s, beta), LaurentPoly2(1));
    }
    return out;
  }

  /// psi_s(e_beta) = phi_s(e_beta) + x T(s, beta) e_{alpha_s}.
  SparseVector psi_basis(Vertex s, RootId beta) const {
    SparseVector out = phi_basis(s, beta);
    out.add(roots_->simple(s), LaurentPoly2::x() * tpoly(s, beta));
    return out;
  }

  /// rho_s(e_beta), the inverse of psi_s.
  SparseVector rho_basis(Vertex s, RootId beta) const {
    SparseVector out;
    const RootId as = roots_->simple(s);
    const Coeff a = roots_->pairing_simple(s, beta);
    const LaurentPoly2 one(1);
    if (beta == as) {
      out.add(as, LaurentPoly2::monomial(-1, -2));
    } else if (a == 0) {
      out.add(beta, one);
      out.add(as, -LaurentPoly2::y(-2) * tpoly(s, beta));
    } else if (a > 0) {
      const RootId lowered = *roots_->reflect(s, beta);  // beta - a alpha_s
      out.add(beta, one - LaurentPoly2::y(-1));
      out.add(lowered, one);
      out.add(as, -LaurentPoly2::y(-2) * tpoly(s, lowered));
      out.add(as, LaurentPoly2::y(-2) * (LaurentPoly2::y(-1) - one) * tpoly(s, beta));
    } else {
      const RootId raised = *roots_->reflect(s, beta);  // beta + a alpha_s
      out.add(raised, LaurentPoly2::y(-1));
      out.add(as, -LaurentPoly2::y(-3) * tpoly(s, raised));
    }
    return out;
  }

  SparseVector phi_apply(Vertex s, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [beta, c] : v.entries()) out.add(phi_basis(s, beta), c);
    return out;
  }

  SparseVector psi_apply(Vertex s, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [beta, c] : v.entries()) out.add(psi_basis(s, beta), c);
    return out;
  }

  SparseVector rho_apply(Vertex s, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [beta, c] : v.entries()) out.add(rho_basis(s, beta), c);
    return out;
  }

  /// psi(f)(v): the last letter of f acts first.
  SparseVector psi_word_apply(const Word& f, SparseVector v) const {
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = psi_apply(*it, v);
    return v;
  }

  SparseVector phi_word_apply(const Word& f, SparseVector v) const {
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = phi_apply(*it, v);
    return v;
  }

 private:
  std::optional<Vertex> reducing_vertex(RootId beta) const {
    for (std::size_t t = 0; t < graph().size(); ++t)
      if (roots_->pairing_simple(static_cast<Vertex>(t), beta) > 0) return static_cast<Vertex>(t);
    return std::nullopt;
  }

  std::shared_ptr<const RootSystem> roots_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Vertex, RootId>, LaurentPoly2> memo_;
};

// ---------------------------------------------------------------------------
// Serialization: {"<root json>": "<polynomial text>"} in (depth, lex) order.

inline nlohmann::json vector_to_json(const RootSystem& rs, const SparseVector& v) {
  std::vector<RootId> ids;
  for (const auto& [beta, c] : v.entries()) ids.push_back(beta);
  rs.sort_roots(ids);
  nlohmann::ordered_json ordered = nlohmann::ordered_json::object();
  for (RootId id : ids) ordered[root_to_json(rs.graph(), rs.root(id)).dump()] = v.coefficient(id).to_string();
  return nlohmann::json::parse(ordered.dump());
}

inline std::string vector_to_string(const RootSystem& rs, const SparseVector& v) {
  std::vector<RootId> ids;
  for (const auto& [beta, c] : v.entries()) ids.push_back(beta);
  rs.sort_roots(ids);
  nlohmann::ordered_json ordered = nlohmann::ordered_json::object();
  for (RootId id : ids) ordered[root_to_json(rs.graph(), rs.root(id)).dump()] = v.coefficient(id).to_string();
  return ordered.dump();
}

// ---------------------------------------------------------------------------
// Verification of the defining relations and of the T recursion.

/// For every pair s < t and every e_beta with dp(beta) <= max_depth:
/// psi_s psi_t psi_s = psi_t psi_s psi_t when m = 3, psi_s psi_t = psi_t psi_s
/// when m = 2.
inline VerificationReport verify_relations(const RepContext& ctx, int max_depth, const std::string& graph_id = "") {
  VerificationReport report("relations", graph_id, {{"max_depth", max_depth}});
  const CoxeterGraph& g = ctx.graph();
  const auto basis = ctx.roots().positive_roots(max_depth);
  for (std::size_t si = 0; si < g.size(); ++si)
    for (std::size_t ti = si + 1; ti < g.size(); ++ti) {
      const auto s = static_cast<Vertex>(si);
      const auto t = static_cast<Vertex>(ti);
      const int m = g.label(s, t);
      const Word lhs = m == 3 ? Word{s, t, s} : Word{s, t};
      const Word rhs = m == 3 ? Word{t, s, t} : Word{t, s};
      const std::string family = m == 3 ? "braid psi_s psi_t psi_s = psi_t psi_s psi_t" : "commutation psi_s psi_t = psi_t psi_s";
      for (RootId beta : basis) {
        auto left = ctx.psi_word_apply(lhs, SparseVector::basis(beta));
        auto right = ctx.psi_word_apply(rhs, SparseVector::basis(beta));
        const bool ok = left == right;
        nlohmann::json payload;
        if (!ok)
          payload = {{"s", g.name(s)},
                     {"t", g.name(t)},
                     {"beta", root_to_json(g, ctx.roots().root(beta))},
                     {"lhs", vector_to_json(ctx.roots(), left)},
                     {"rhs", vector_to_json(ctx.roots(), right)}};
        report.record(family, ok, payload);
      }
    }
  report.finish();
  return report;
}

/// Choice independence of T(s, beta) over all admissible t, and
/// T(s, beta) = T(t, beta) when m(s,t) = 3 and beta is orthogonal to both.
inline VerificationReport verify_tpoly_lemmas(const RepContext& ctx, int max_depth, const std::string& graph_id = "") {
  VerificationReport report("tpoly", graph_id, {{"max_depth", max_depth}});
  const CoxeterGraph& g = ctx.graph();
  const RootSystem& rs = ctx.roots();
  report.declare("choice independence, <alpha_s, beta> = 0");
  report.declare("choice independence, <alpha_s, beta> < 0");
  report.declare("T(s, beta) = T(t, beta) for orthogonal beta");
  for (RootId beta : rs.positive_roots(max_depth)) {
    const auto choices = ctx.admissible_choices(beta);
    for (std::size_t si = 0; si < g.size(); ++si) {
      const auto s = static_cast<Vertex>(si);
      const Coeff a = rs.pairing_simple(s, beta);
      if (rs.depth(beta) >= 2 && a <= 0) {
        const std::string family =
            a == 0 ? "choice independence, <alpha_s, beta> = 0" : "choice independence, <alpha_s, beta> < 0";
        const LaurentPoly2 reference = ctx.tpoly(s, beta);
        for (Vertex t : choices) {
          const LaurentPoly2 value = ctx.tpoly_with_choice(s, beta, t);
          nlohmann::json payload;
          if (value != reference)
            payload = {{"s", g.name(s)},
                       {"beta", root_to_json(g, rs.root(beta))},
                       {"t", g.name(t)},
                       {"value", value.to_string()},
                       {"reference", reference.to_string()}};
          report.record(family, value == reference, payload);
        }
      }
      for (Vertex t : g.neighbors(s)) {
        if (t <= s || a != 0 || rs.pairing_simple(t, beta) != 0) continue;
        const LaurentPoly2 ts = ctx.tpoly(s, beta);
        const LaurentPoly2 tt = ctx.tpoly(t, beta);
        nlohmann::json payload;
        if (ts != tt)
          payload = {{"s", g.name(s)},
                     {"t", g.name(t)},
                     {"beta", root_to_json(g, rs.root(beta))},
                     {"T(s,beta)", ts.to_string()},
                     {"T(t,beta)", tt.to_string()}};
        report.record("T(s, beta) = T(t, beta) for orthogonal beta", ts == tt, payload);
      }
    }
  }
  report.finish();
  return report;
}

/// rho_s psi_s = psi_s rho_s = identity on every e_beta with dp(beta) <= max_depth.
inline VerificationReport verify_inverse(const RepContext& ctx, int max_depth, const std::string& graph_id = "") {
  VerificationReport report("inverse", graph_id, {{"max_depth", max_depth}});
  const CoxeterGraph& g = ctx.graph();
  for (RootId beta : ctx.roots().positive_roots(max_depth))
    for (std::size_t si = 0; si < g.size(); ++si) {
      const auto s = static_cast<Vertex>(si);
      const SparseVector e = SparseVector::basis(beta);
      const auto a = ctx.rho_apply(s, ctx.psi_apply(s, e));
      const auto b = ctx.psi_apply(s, ctx.rho_apply(s, e));
      auto payload = [&](const SparseVector& got) {
        return nlohmann::json{{"s", g.name(s)},
                              {"beta", root_to_json(g, ctx.roots().root(beta))},
                              {"got", vector_to_json(ctx.roots(), got)}};
      };
      report.record("rho_s psi_s = id", a == e, a == e ? nlohmann::json{} : payload(a));
      report.record("psi_s rho_s = id", b == e, b == e ? nlohmann::json{} : payload(b));
    }
  report.finish();
  return report;
}

}  // namespace artin
