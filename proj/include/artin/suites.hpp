#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/closed.hpp"
#include "artin/coxeter.hpp"
#include "artin/monoid.hpp"
#include "artin/rep.hpp"
#include "artin/report.hpp"
#include "artin/roots.hpp"

namespace artin {

/// Every word over the vertex set of length <= max_length, shortest first.
inline std::vector<Word> all_words(const CoxeterGraph& g, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t s = 0; s < g.size(); ++s) {
        Word w = out[i];
        w.push_back(static_cast<Vertex>(s));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

/// L(f) computed greedily on braid closures, cached per class.
class ClosureL {
 public:
  explicit ClosureL(const CoxeterGraph& g, std::size_t cap = kDefaultClosureCap) : oracle_(g, cap) {}

  GroupElement operator()(const Word& f) {
    Word key = oracle_.representative(f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    GroupElement value = L_bfs(oracle_, f);
    memo_.emplace(std::move(key), value);
    return value;
  }

  BraidOracle& oracle() { return oracle_; }

 private:
  BraidOracle oracle_;
  std::map<Word, GroupElement> memo_;
};

/// Phi_w read off directly: positive roots of depth <= l(w) sent negative by
/// w^{-1}.
inline RootSet inversion_set_by_action(const RootSystem& rs, const GroupElement& w) {
  const Word rev(w.word().rbegin(), w.word().rend());
  const Action inv(rs.graph(), rev);
  RootSet out;
  for (RootId beta : rs.positive_roots(static_cast<int>(w.length())))
    if (inv.apply(rs.root(beta)).is_negative()) out.insert(beta);
  return out;
}

/// Monoid order laws on a small-type graph, for words and elements of length
/// <= max_length.
inline VerificationReport verify_order(const CoxeterGraph& g, std::size_t max_length,
                                       const std::string& graph_id = "", std::size_t cap = kDefaultClosureCap) {
  require_small_type(g);
  VerificationReport report("order", graph_id, {{"max_length", max_length}, {"cap", cap}});
  RootSystem rs(g);
  ClosureL l_of(g, cap);
  const auto words = all_words(g, max_length);
  const auto elements = enumerate_elements(g, max_length);

  const std::string law = "L(fg) = L(f tau(L(g)))";
  std::vector<Word> tau_l;
  for (const Word& h : words) tau_l.push_back(tau(l_of(h)));
  for (const Word& f : words)
    for (std::size_t j = 0; j < words.size(); ++j) {
      const GroupElement lhs = l_of(concat(f, words[j]));
      const GroupElement rhs = l_of(concat(f, tau_l[j]));
      nlohmann::json payload;
      if (lhs != rhs)
        payload = {{"f", format_word(g, f)},
                   {"g", format_word(g, words[j])},
                   {"L(fg)", format_word(g, lhs.word())},
                   {"L(f tau(L(g)))", format_word(g, rhs.word())}};
      report.record(law, lhs == rhs, payload);
    }

  for (const GroupElement& w : elements) {
    const RootSet direct = inversion_set_by_action(rs, w);
    const RootSet built = inversion_root_set(rs, w);
    const bool size_ok = direct.size() == w.length() && direct == built;
    report.record("|Phi_w| = l(w)", size_ok,
                  size_ok ? nlohmann::json{}
                          : nlohmann::json{{"w", format_word(g, w.word())}, {"size", direct.size()}});
    const bool closed = is_closed(rs, direct);
    report.record("Phi_w is closed", closed,
                  closed ? nlohmann::json{} : nlohmann::json{{"w", format_word(g, w.word())}});
  }

  for (const GroupElement& u : elements)
    for (const GroupElement& v : elements) {
      const bool weak = weak_le(g, u, v);
      const bool divides = l_of.oracle().left_divides(tau(u), tau(v));
      nlohmann::json payload;
      if (weak != divides)
        payload = {{"u", format_word(g, u.word())}, {"v", format_word(g, v.word())}, {"weak", weak}, {"divides", divides}};
      report.record("u <= v iff tau(u) divides tau(v)", weak == divides, payload);
    }
  report.finish();
  return report;
}

struct ClosedSuiteOptions {
  std::size_t max_length = 5;       // words g in the * law
  std::size_t roundtrip_length = 6;  // elements in the round trips
  std::size_t support_length = 4;    // words in the support cross-check
  std::size_t support_sets = 16;     // closed sets used by the cross-check
  std::size_t samples = 0;           // 0: every closed subset (finite systems)
  int sample_depth = 4;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultClosureCap;
};

/// Random closed subsets: up to four roots of depth <= depth, rejected until
/// closed.
inline std::vector<RootSet> sample_closed_subsets(const RootSystem& rs, std::size_t count, int depth,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = rs.positive_roots(depth);
  std::uniform_int_distribution<std::size_t> size_dist(0, std::min<std::size_t>(4, pool.size()));
  std::vector<RootSet> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 10000 * (count + 1)) throw Error("could not sample enough closed subsets");
    std::vector<RootId> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    RootSet a(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    if (is_closed(rs, a)) out.push_back(std::move(a));
  }
  return out;
}

/// Laws of the * action on closed sets, C, and their link with L.
inline VerificationReport verify_closed(const CoxeterGraph& g, const ClosedSuiteOptions& opt,
                                        const std::string& graph_id = "") {
  VerificationReport report("closed", graph_id,
                            {{"max_length", opt.max_length},
                             {"roundtrip_length", opt.roundtrip_length},
                             {"support_length", opt.support_length},
                             {"samples", opt.samples},
                             {"sample_depth", opt.sample_depth},
                             {"seed", opt.seed}});
  auto rs_ptr = std::make_shared<const RootSystem>(g);
  const RootSystem& rs = *rs_ptr;
  RepContext ctx(rs_ptr);
  ClosureL l_of(g, opt.cap);

  const std::vector<RootSet> sets =
      opt.samples == 0 ? all_closed_subsets(rs) : sample_closed_subsets(rs, opt.samples, opt.sample_depth, opt.seed);
  auto set_json = [&](const RootSet& a) { return root_set_to_json(rs, a); };
  const auto words = all_words(g, opt.max_length);

  // Elements short enough to contain any Phi_w inside the sets' horizon.
  std::size_t horizon = 0;
  for (const RootSet& a : sets) horizon = std::max(horizon, a.size() + 1);
  horizon = std::max(horizon, opt.roundtrip_length);
  const auto elements = enumerate_elements(g, horizon);

  for (const RootSet& a : sets) {
    const GroupElement ca = cmax(rs, a);
    const Word tau_ca = tau(ca);
    for (std::size_t si = 0; si < g.size(); ++si) {
      const auto s = static_cast<Vertex>(si);
      const RootSet b = star(rs, s, a);
      RootSet bound{rs.simple(s)};
      for (RootId beta : a)
        if (beta != rs.simple(s)) bound.insert(*rs.reflect(s, beta));
      nlohmann::json where{{"s", g.name(s)}, {"A", set_json(a)}, {"sigma_s * A", set_json(b)}};
      report.record("sigma_s * A is closed", is_closed(rs, b), where);
      report.record("sigma_s * A contains alpha_s", b.count(rs.simple(s)) == 1, where);
      report.record("sigma_s * A inside {alpha_s} + s(A - alpha_s)",
                    std::includes(bound.begin(), bound.end(), b.begin(), b.end()), where);

      // Every closed B with alpha_s in B inside the bound lies in sigma_s * A.
      const std::vector<RootId> rest(bound.begin(), bound.end());
      if (rest.size() <= 16)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
          RootSet candidate;
          for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1) candidate.insert(rest[i]);
          if (!candidate.count(rs.simple(s)) || !is_closed(rs, candidate)) continue;
          const bool ok = std::includes(b.begin(), b.end(), candidate.begin(), candidate.end());
          report.record("closed B between {alpha_s} and the bound lies in sigma_s * A", ok,
                        ok ? nlohmann::json{} : nlohmann::json{{"s", g.name(s)}, {"A", set_json(a)}, {"B", set_json(candidate)}});
        }

      // For s a left descent of w: Phi_w inside the bound iff w <= L(sigma_s tau(C(A))).
      const GroupElement target = l_of(concat({s}, tau_ca));
      for (const GroupElement& w : elements) {
        if (w.is_identity() || !Action(g, w.word()).is_left_descent(s)) continue;
        const RootSet phi = inversion_root_set(rs, w);
        const bool inside = std::includes(bound.begin(), bound.end(), phi.begin(), phi.end());
        const bool below = weak_le(g, w, target);
        report.record("Phi_w inside the bound iff w <= L(sigma_s tau(C(A)))", inside == below,
                      inside == below ? nlohmann::json{}
                                      : nlohmann::json{{"s", g.name(s)}, {"A", set_json(a)}, {"w", format_word(g, w.word())}});
      }
    }

    for (const Word& f : words) {
      const GroupElement lhs = cmax(rs, star_word(rs, f, a));
      const GroupElement rhs = l_of(concat(f, tau_ca));
      nlohmann::json payload;
      if (lhs != rhs)
        payload = {{"g", format_word(g, f)},
                   {"A", set_json(a)},
                   {"C(g * A)", format_word(g, lhs.word())},
                   {"L(g tau(C(A)))", format_word(g, rhs.word())}};
      report.record("C(g * A) = L(g tau(C(A)))", lhs == rhs, payload);
    }
  }

  for (const GroupElement& w : enumerate_elements(g, opt.roundtrip_length)) {
    const RootSet phi = inversion_root_set(rs, w);
    const RootSet starred = star_word(rs, tau(w), {});
    report.record("tau(w) * empty = Phi_w", starred == phi,
                  starred == phi ? nlohmann::json{} : nlohmann::json{{"w", format_word(g, w.word())}, {"got", set_json(starred)}});
    const GroupElement back = cmax(rs, phi);
    report.record("C(Phi_w) = w", back == w,
                  back == w ? nlohmann::json{}
                            : nlohmann::json{{"w", format_word(g, w.word())}, {"got", format_word(g, back.word())}});
  }

  const auto short_words = all_words(g, opt.support_length);
  const std::size_t n_support = std::min(opt.support_sets, sets.size());
  for (std::size_t i = 0; i < n_support; ++i)
    for (const Word& f : short_words) {
      const RootSet comb = star_word(rs, f, sets[i]);
      const RootSet via = star_word_via_support(ctx, f, sets[i]);
      report.record("g * A agrees with the supports of psi at x = 0, y = 1/2", comb == via,
                    comb == via ? nlohmann::json{}
                                : nlohmann::json{{"g", format_word(g, f)},
                                                 {"A", set_json(sets[i])},
                                                 {"star", set_json(comb)},
                                                 {"support", set_json(via)}});
    }

  report.finish();
  return report;
}

}  // namespace artin
