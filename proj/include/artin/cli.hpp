#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/closed.hpp"
#include "artin/error.hpp"
#include "artin/fold.hpp"
#include "artin/graph.hpp"
#include "artin/monoid.hpp"
#include "artin/rep.hpp"
#include "artin/roots.hpp"
#include "artin/suites.hpp"

namespace artin::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

inline CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text << "\n";
}

inline std::string verdict(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string graph_file;
  bool json = false;
  int max_depth = 5;
  std::size_t cap = kDefaultClosureCap;

  // graph-check
  bool small_type = false;
  bool no_triangle = false;
  bool spherical = false;

  // tpoly
  std::string vertex;
  std::string root;

  // verify
  std::string suite;
  std::size_t max_length = 5;
  std::size_t samples = 0;
  std::uint64_t seed = 1;

  // decode / eq / lcm
  std::string word;
  std::string a;
  std::string b;
  std::string method = "decode";
  std::size_t length_cap = 20;

  // fold
  bool twice = false;
  std::string output;
  std::string map_file;
  bool check_lcm = false;
};

inline int cmd_graph_check(const Options& o, std::ostream& out) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const bool st = is_small_type(g);
  const bool nt = has_no_triangle(g);
  const bool sp = is_spherical(g);
  const bool any = o.small_type || o.no_triangle || o.spherical;
  if (o.json) {
    nlohmann::json doc = nlohmann::json::object();
    if (!any || o.small_type) doc["small_type"] = st;
    if (!any || o.no_triangle) doc["no_triangle"] = nt;
    if (!any || o.spherical) doc["spherical"] = sp;
    out << doc.dump() << "\n";
  } else if (!any) {
    out << "small-type: " << verdict(st) << "\nno-triangle: " << verdict(nt) << "\nspherical: " << verdict(sp) << "\n";
  } else {
    if (o.small_type) out << verdict(st) << "\n";
    if (o.no_triangle) out << verdict(nt) << "\n";
    if (o.spherical) out << verdict(sp) << "\n";
  }
  if (!any) return kOk;
  const bool all = (!o.small_type || st) && (!o.no_triangle || nt) && (!o.spherical || sp);
  return all ? kOk : kFalse;
}

inline int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs(load_graph(o.graph_file));
  const auto ids = rs.positive_roots(o.max_depth);
  if (o.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (RootId id : ids) rows.push_back({{"depth", rs.depth(id)}, {"root", root_to_json(rs.graph(), rs.root(id))}});
    out << rows.dump() << "\n";
  } else {
    for (RootId id : ids) out << rs.depth(id) << "\t" << root_to_string(rs.graph(), rs.root(id)) << "\n";
  }
  return kOk;
}

inline int cmd_tpoly(const Options& o, std::ostream& out) {
  const RepContext ctx(load_graph(o.graph_file));
  const CoxeterGraph& g = ctx.graph();
  const RootSystem& rs = ctx.roots();
  std::vector<Vertex> vertices;
  if (o.vertex.empty())
    vertices = all_vertices(g);
  else
    vertices.push_back(g.index(o.vertex));
  std::vector<RootId> roots;
  if (o.root.empty()) {
    roots = rs.positive_roots(o.max_depth);
  } else {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(o.root);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed root: ") + e.what());
    }
    roots.push_back(rs.id(root_from_json(g, doc)));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (RootId beta : roots)
    for (Vertex s : vertices) {
      const std::string poly = ctx.tpoly(s, beta).to_string();
      if (o.json)
        rows.push_back({{"s", g.name(s)}, {"root", root_to_json(g, rs.root(beta))}, {"T", poly}});
      else
        out << "T(" << g.name(s) << ", " << root_to_string(g, rs.root(beta)) << ") = " << poly << "\n";
    }
  if (o.json) out << rows.dump() << "\n";
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const CoxeterGraph g = load_graph(o.graph_file);
  std::unique_ptr<VerificationReport> report;
  if (o.suite == "relations" || o.suite == "tpoly" || o.suite == "inverse") {
    const RepContext ctx(g);
    if (o.suite == "relations")
      report = std::make_unique<VerificationReport>(verify_relations(ctx, o.max_depth, o.graph_file));
    else if (o.suite == "tpoly")
      report = std::make_unique<VerificationReport>(verify_tpoly_lemmas(ctx, o.max_depth, o.graph_file));
    else
      report = std::make_unique<VerificationReport>(verify_inverse(ctx, o.max_depth, o.graph_file));
  } else if (o.suite == "order") {
    report = std::make_unique<VerificationReport>(verify_order(g, o.max_length, o.graph_file, o.cap));
  } else if (o.suite == "closed") {
    ClosedSuiteOptions opt;
    opt.max_length = o.max_length;
    opt.samples = o.samples;
    opt.seed = o.seed;
    opt.cap = o.cap;
    // Large systems cannot be enumerated; fall back to seeded samples.
    const RootSystem probe(g);
    if (opt.samples == 0 && !(probe.is_finite(static_cast<int>(4 * g.size() + 4)) &&
                              probe.positive_roots(static_cast<int>(4 * g.size() + 4)).size() <= 20))
      opt.samples = 500;
    report = std::make_unique<VerificationReport>(verify_closed(g, opt, o.graph_file));
  } else {
    throw ParseError("unknown suite '" + o.suite + "'");
  }
  out << (o.json ? report->to_json().dump(2) + "\n" : report->to_text());
  return report->passed() ? kOk : kFalse;
}

inline int cmd_decode(const Options& o, std::ostream& out) {
  const RootSystem rs(load_graph(o.graph_file));
  const auto pieces = decode(rs, parse_word(rs.graph(), o.word));
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& u : pieces) arr.push_back(format_word(rs.graph(), u.word()));
    out << arr.dump() << "\n";
  } else {
    for (const auto& u : pieces) out << format_word(rs.graph(), u.word()) << "\n";
  }
  return kOk;
}

inline int cmd_eq(const Options& o, std::ostream& out) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const Word a = parse_word(g, o.a);
  const Word b = parse_word(g, o.b);
  bool equal = false;
  if (o.method == "decode") {
    const RootSystem rs(g);
    equal = eq_via_decode(rs, a, b);
  } else if (o.method == "bfs") {
    equal = monoid_eq_bfs(g, a, b, o.cap);
  } else {
    throw ParseError("unknown method '" + o.method + "'");
  }
  out << verdict(equal) << "\n";
  return equal ? kOk : kFalse;
}

inline int cmd_lcm(const Options& o, std::ostream& out) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const LcmResult r = lcm(g, parse_word(g, o.a), parse_word(g, o.b), o.length_cap, o.cap);
  out << (r.exists ? format_word(g, r.word) : "none") << "\n";
  return kOk;
}

inline int cmd_fold(const Options& o, std::ostream& out) {
  const CoxeterGraph g = load_graph(o.graph_file);
  const FoldMorphism phi = o.twice ? fold_to_small_no_triangle(g) : fold_once(g);
  const nlohmann::json doc = morphism_to_json(phi);
  if (!o.output.empty()) write_file(o.output, graph_to_json(phi.target).dump(2));
  if (!o.map_file.empty()) write_file(o.map_file, doc.dump(2));
  if (o.output.empty() && o.map_file.empty() && !o.check_lcm) out << doc.dump(2) << "\n";
  if (!o.check_lcm) {
    if (!o.json && (!o.output.empty() || !o.map_file.empty()))
      out << "target: " << phi.target.size() << " vertices, small-type " << verdict(is_small_type(phi.target))
          << ", no-triangle " << verdict(has_no_triangle(phi.target)) << "\n";
    return kOk;
  }
  const VerificationReport report = check_respects_lcm(phi, o.cap, o.graph_file);
  out << (o.json ? report.to_json().dump(2) + "\n" : report.to_text());
  return report.passed() ? kOk : kFalse;
}

/// Runs one command line. Errors go to err; the return value is the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin monoids, root systems and the folding construction"};
  app.require_subcommand(1);
  Options o;
  std::size_t cap = kDefaultClosureCap;
  app.add_option("--cap", cap, "node cap for braid-closure searches")->capture_default_str();

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_file, "graph JSON file")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* graph_check = app.add_subcommand("graph-check", "small-type / no-triangle / spherical verdicts");
  graph_arg(graph_check);
  graph_check->add_flag("--small-type", o.small_type);
  graph_check->add_flag("--no-triangle", o.no_triangle);
  graph_check->add_flag("--spherical", o.spherical);

  auto* roots = app.add_subcommand("roots", "positive roots by depth");
  graph_arg(roots);
  roots->add_option("--max-depth", o.max_depth)->capture_default_str();

  auto* tpoly = app.add_subcommand("tpoly", "the polynomials T(s, beta)");
  graph_arg(tpoly);
  tpoly->add_option("--max-depth", o.max_depth)->capture_default_str();
  tpoly->add_option("--vertex", o.vertex, "only this s");
  tpoly->add_option("--root", o.root, "only this root, as JSON {\"s\": 1, ...}");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  graph_arg(verify);
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"relations", "tpoly", "inverse", "closed", "order"}));
  verify->add_option("--max-depth", o.max_depth)->capture_default_str();
  verify->add_option("--max-length", o.max_length, "word length bound for order/closed")->capture_default_str();
  verify->add_option("--samples", o.samples, "closed suite: sampled closed sets (0 = all)");
  verify->add_option("--seed", o.seed, "closed suite: sampling seed")->capture_default_str();

  auto* dec = app.add_subcommand("decode", "the factors u1, u2, ... of a positive word");
  graph_arg(dec);
  dec->add_option("--word", o.word, "whitespace separated letters")->required();

  auto* eq = app.add_subcommand("eq", "equality in the Artin monoid");
  graph_arg(eq);
  eq->add_option("-a", o.a)->required();
  eq->add_option("-b", o.b)->required();
  eq->add_option("--method", o.method)->check(CLI::IsMember({"decode", "bfs"}))->capture_default_str();

  auto* lcm_cmd = app.add_subcommand("lcm", "least common multiple of two positive words");
  graph_arg(lcm_cmd);
  lcm_cmd->add_option("-a", o.a)->required();
  lcm_cmd->add_option("-b", o.b)->required();
  lcm_cmd->add_option("--length-cap", o.length_cap)->capture_default_str();

  auto* fold = app.add_subcommand("fold", "fold into small type with no triangle");
  graph_arg(fold);
  fold->add_flag("--twice", o.twice, "apply the construction twice");
  fold->add_option("-o", o.output, "write the target graph here");
  fold->add_option("--map", o.map_file, "write the morphism here");
  fold->add_flag("--check-lcm", o.check_lcm, "check that the morphism respects lcm's");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  o.cap = cap;

  try {
    if (graph_check->parsed()) return cmd_graph_check(o, out);
    if (roots->parsed()) return cmd_roots(o, out);
    if (tpoly->parsed()) return cmd_tpoly(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dec->parsed()) return cmd_decode(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (lcm_cmd->parsed()) return cmd_lcm(o, out);
    if (fold->parsed()) return cmd_fold(o, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace artin::cli
