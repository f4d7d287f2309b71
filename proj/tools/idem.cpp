#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "idem/checks.hpp"
#include "idem/congruence.hpp"
#include "idem/edges.hpp"
#include "idem/fixtures.hpp"
#include "idem/genclose.hpp"
#include "idem/io.hpp"
#include "idem/reduct.hpp"
#include "idem/report.hpp"
#include "idem/synth.hpp"
#include "idem/thin.hpp"

using namespace idem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerification = 1, kInput = 2, kCap = 3 };

struct Options {
  std::vector<std::string> fixtures;
  std::vector<std::string> inputs;
  std::string json_path;
  std::string dot_path;
  std::string hyper_dot_path;
  std::uint64_t seed = 20240601;
  std::size_t max_size = Limits{}.max_size;
  std::size_t cap = Limits{}.node_cap;
  bool force = false;
  std::size_t arity = 3;
  std::vector<std::string> pair;
};

Limits limits_of(const Options& o) {
  Limits l;
  l.max_size = o.max_size;
  l.node_cap = o.cap;
  return l;
}

std::vector<FiniteAlgebra> load(const Options& o, bool default_all) {
  std::vector<FiniteAlgebra> out;
  std::vector<std::string> names = o.fixtures;
  if (names.empty() && o.inputs.empty()) {
    if (!default_all) throw Error(ErrorKind::PreconditionViolated, "give --fixture or --input");
    names = fixtures::names();
  }
  for (const auto& n : names) out.push_back(fixtures::by_name(n));
  for (const auto& path : o.inputs) {
    out.push_back(validate_algebra(parse_algebra_text(read_file(path)), limits_of(o), o.force));
  }
  if (!o.force) {
    for (const auto& a : out) {
      if (a.size() > o.max_size) {
        throw Error(ErrorKind::TooLarge, a.name() + " has " + std::to_string(a.size()) + " elements; use --force");
      }
    }
  }
  return out;
}

const FiniteAlgebra& single(const std::vector<FiniteAlgebra>& algebras, const std::string& what) {
  if (algebras.size() != 1) throw Error(ErrorKind::PreconditionViolated, what + " needs exactly one algebra");
  return algebras.front();
}

void emit_json(const Options& o, const json& j) {
  if (!o.json_path.empty()) write_file_atomic(o.json_path, j.dump(2) + "\n");
}

void print_graph(const FiniteAlgebra& a, const StructureGraph& g) {
  std::cout << a.name() << " (" << a.size() << " elements)\n";
  for (const auto& r : g.reports) std::cout << edge_report_text(a, r) << "\n";
  std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
}

int cmd_edges(const Options& o) {
  json j = report_envelope("edges");
  j["algebras"] = json::array();
  bool unknown = false;
  for (const auto& a : load(o, false)) {
    const StructureGraph g = structure_graph(a, limits_of(o));
    print_graph(a, g);
    for (const auto& r : g.reports) unknown = unknown || r.unknown;
    j["algebras"].push_back(graph_json(a, g));
  }
  emit_json(o, j);
  return unknown ? kCap : kOk;
}

int cmd_graph(const Options& o) {
  const auto algebras = load(o, false);
  const FiniteAlgebra& a = single(algebras, "graph");
  const StructureGraph g = structure_graph(a, limits_of(o));
  const StructureGraph h = hypergraph(a, limits_of(o));
  if (!o.dot_path.empty()) write_file_atomic(o.dot_path, graph_dot(g, a.name()));
  if (!o.hyper_dot_path.empty()) write_file_atomic(o.hyper_dot_path, hypergraph_dot(h, a.name()));
  if (o.dot_path.empty() && o.hyper_dot_path.empty()) std::cout << graph_dot(g, a.name());
  std::cout << "G connected: " << (is_connected(g) ? "yes" : "no") << ", H connected: " << (is_connected(h) ? "yes" : "no")
            << "\n";
  json j = report_envelope("graph");
  j["graph"] = graph_json(a, g);
  j["hypergraph"] = graph_json(a, h);
  emit_json(o, j);
  return kOk;
}

void print_uniform(const UniformOps& u) {
  std::cout << "f = " << u.ops.f.to_string() << "\n";
  std::cout << "g = " << u.ops.g.to_string() << "\n";
  std::cout << "h = " << u.ops.h.to_string() << "\n";
  std::cout << "thick edges: " << u.inventory.semilattice.size() << " semilattice, " << u.inventory.majority.size()
            << " majority, " << u.inventory.affine.size() << " affine\n";
  std::size_t bad = 0;
  for (const auto& c : u.checks) bad += c.ok ? 0 : 1;
  std::cout << u.checks.size() << " checks, " << bad << " failed\n";
}

int cmd_synth(const Options& o) {
  const UniformOps u = uniform_ops(load(o, false), limits_of(o));
  print_uniform(u);
  json j = report_envelope("synth");
  j["uniform"] = uniform_json(u);
  emit_json(o, j);
  return u.ok() ? kOk : kVerification;
}

int cmd_thin(const Options& o) {
  const UniformOps u = uniform_ops(load(o, false), limits_of(o));
  json j = report_envelope("thin");
  j["uniform"] = uniform_json(u);
  j["thin"] = json::array();
  bool ok = u.ok();
  const auto& members = u.inventory.members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ThinGraph tg = thin_graph(members[i], u.inventory.graphs[i], u.ops);
    std::cout << members[i].name() << ":\n";
    for (const auto& e : tg.arcs) {
      ok = ok && e.necessary.value_or(false);
      std::cout << "  " << members[i].label(e.a) << " -> " << members[i].label(e.b) << "  " << to_string(e.kind)
                << "  " << e.certificate << (e.necessary.value_or(false) ? "" : "  [necessary FAILED]") << "\n";
    }
    if (!o.dot_path.empty() && members.size() == 1) write_file_atomic(o.dot_path, thin_dot(tg, members[i].name()));
    j["thin"].push_back(thin_json(members[i], tg));
  }
  if (!o.dot_path.empty() && members.size() != 1) {
    throw Error(ErrorKind::PreconditionViolated, "--dot for thin needs exactly one algebra");
  }
  emit_json(o, j);
  return ok ? kOk : kVerification;
}

Elem element_of(const FiniteAlgebra& a, const std::string& token) {
  for (Elem e = 0; e < a.size(); ++e) {
    if (a.label(e) == token) return e;
  }
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(token, &pos);
    if (pos == token.size() && v < a.size()) return static_cast<Elem>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::PreconditionViolated, "no element '" + token + "' in " + a.name());
}

int cmd_reduct(const Options& o) {
  const auto algebras = load(o, false);
  const FiniteAlgebra& a = single(algebras, "reduct");
  if (o.pair.size() != 2) throw Error(ErrorKind::PreconditionViolated, "--pair needs two elements");
  const Elem x = element_of(a, o.pair[0]), y = element_of(a, o.pair[1]);
  const EdgeReport rep = classify_pair(a, x, y, o.cap);
  std::optional<std::size_t> witness;
  for (std::size_t i = 0; i < rep.witnesses.size() && !witness; ++i) {
    const auto& l = rep.witnesses[i].label;
    if (l && (*l == EdgeType::Semilattice || *l == EdgeType::Majority)) witness = i;
  }
  if (!witness) throw Error(ErrorKind::PreconditionViolated, "the pair is not a semilattice or majority edge");
  const BoundedReduct r = bounded_reduct(a, rep, *witness, o.arity, o.cap);
  const ReductDiff d = reduct_edge_report(r, limits_of(o));
  std::cout << "reduct of " << a.name() << " for " << a.label(x) << a.label(y) << ", arity <= " << o.arity << ": "
            << r.algebra.operations().size() << " operations\n";
  for (const auto& p : d.pairs) {
    std::string before, after;
    for (EdgeType t : p.base_types) before += std::string(before.empty() ? "" : "+") + std::string(to_string(t));
    for (EdgeType t : p.reduct_types) after += std::string(after.empty() ? "" : "+") + std::string(to_string(t));
    std::cout << "  " << a.label(p.a) << a.label(p.b) << ": " << (before.empty() ? "none" : before) << " -> "
              << (after.empty() ? "none" : after) << "\n";
  }
  std::cout << "identical: " << (d.identical ? "yes" : "no") << ", new unary: " << (d.new_unary ? "yes" : "no")
            << ", new affine: " << (d.new_affine ? "yes" : "no") << "\n";
  json j = report_envelope("reduct");
  j["reduct"] = reduct_json(r, d);
  emit_json(o, j);
  return kOk;
}

void print_suites(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites) {
    std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << " (" << s.checked << " checks)\n";
    for (const auto& f : s.failures) std::cout << "    " << f << "\n";
    for (const auto& k : s.skipped) std::cout << "    skipped: " << k << "\n";
  }
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names = o.fixtures;
  if (names.empty() && o.inputs.empty()) names = fixtures::names();
  const Limits lim = limits_of(o);
  std::vector<FiniteAlgebra> algebras;
  std::vector<std::future<std::vector<SuiteResult>>> jobs;
  for (const auto& n : names) {
    algebras.push_back(fixtures::by_name(n));
    jobs.push_back(std::async(std::launch::async, [n, &o, lim] { return fixture_suites(n, o.seed, lim); }));
  }
  Options files = o;
  files.fixtures.clear();
  if (!o.inputs.empty()) {
    for (const auto& a : load(files, false)) {
      algebras.push_back(a);
      jobs.push_back(std::async(std::launch::async, [a, &o, lim] { return algebra_suites(a, o.seed, lim); }));
    }
  }
  if (algebras.size() > 1) {
    jobs.push_back(std::async(std::launch::async, [&algebras, lim] { return class_suites(algebras, lim); }));
  }
  std::vector<SuiteResult> all;
  for (auto& job : jobs) {
    auto s = job.get();
    all.insert(all.end(), s.begin(), s.end());
  }
  print_suites(all);
  bool ok = true;
  for (const auto& s : all) ok = ok && s.ok();
  json j = report_envelope("verify");
  j["seed"] = o.seed;
  j["suites"] = suites_json(all);
  j["ok"] = ok;
  emit_json(o, j);
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? kOk : kVerification;
}

int cmd_analyze(const Options& o) {
  const auto algebras = load(o, false);
  const Limits lim = limits_of(o);
  json j = report_envelope("analyze");
  j["algebras"] = json::array();
  for (const auto& a : algebras) {
    const auto cons = congruence_lattice(a, lim);
    const auto subs = all_subalgebras(a, lim);
    const StructureGraph g = structure_graph(a, lim);
    const StructureGraph h = hypergraph(a, lim);
    const bool smooth = is_smooth(a, lim);
    print_graph(a, g);
    std::cout << "congruences: " << cons.size() << (cons.size() == 2 ? " (simple)" : "") << ", subuniverses: "
              << subs.size() << ", H connected: " << (is_connected(h) ? "yes" : "no")
              << ", smooth: " << (smooth ? "yes" : "no") << "\n";
    json aj{{"algebra", algebra_json(a)}, {"graph", graph_json(a, g)}, {"smooth", smooth}};
    aj["congruences"] = json::array();
    for (const auto& c : cons) aj["congruences"].push_back(c.to_string());
    aj["hypergraph_connected"] = is_connected(h);
    j["algebras"].push_back(std::move(aj));
  }
  int code = kOk;
  try {
    const UniformOps u = uniform_ops(algebras, lim);
    print_uniform(u);
    j["uniform"] = uniform_json(u);
    json thin = json::array();
    for (std::size_t i = 0; i < u.inventory.members.size(); ++i) {
      thin.push_back(thin_json(u.inventory.members[i], thin_graph(u.inventory.members[i], u.inventory.graphs[i], u.ops)));
    }
    j["thin"] = thin;
    if (!u.ok()) code = kVerification;
  } catch (const Error& e) {
    std::cout << "synthesis skipped: " << e.what() << "\n";
    j["uniform_error"] = e.what();
  }
  emit_json(o, j);
  return code;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::CapExceeded:
      return kCap;
    case ErrorKind::VerificationFailed:
    case ErrorKind::PostconditionFailed:
    case ErrorKind::EmptyResult:
    case ErrorKind::CaseNotRecognized:
    case ErrorKind::WitnessNotFound:
      return kVerification;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edges, thin edges and uniform operations of finite idempotent algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--fixture", o.fixtures, "Built-in fixture (repeatable)");
    c->add_option("--input", o.inputs, "Algebra file (repeatable)");
    c->add_option("--json", o.json_path, "Write the report as JSON");
    c->add_option("--max-size", o.max_size, "Largest universe accepted");
    c->add_option("--cap", o.cap, "Node cap for closures");
    c->add_flag("--force", o.force, "Accept universes above --max-size");
  };
  auto* analyze = app.add_subcommand("analyze", "Congruences, edges, synthesis and thin edges");
  auto* edges = app.add_subcommand("edges", "Classify every pair");
  auto* graph = app.add_subcommand("graph", "DOT of the edge graph and hypergraph");
  auto* thin = app.add_subcommand("thin", "Thin edges under the synthesized operations");
  auto* synth = app.add_subcommand("synth", "Synthesize f, g, h for the class");
  auto* reduct = app.add_subcommand("reduct", "Bounded-arity reduct for an edge");
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  for (auto* c : {analyze, edges, graph, thin, synth, reduct, verify}) common(c);
  graph->add_option("--dot", o.dot_path, "Edge graph DOT file");
  graph->add_option("--hyper-dot", o.hyper_dot_path, "Hypergraph DOT file");
  thin->add_option("--dot", o.dot_path, "Thin graph DOT file");
  reduct->add_option("--pair", o.pair, "The edge, as two labels or indices")->expected(2);
  reduct->add_option("--arity", o.arity, "Arity bound")->check(CLI::Range(1, 3));
  verify->add_option("--seed", o.seed, "Seed for generated tolerances and relations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    if (*analyze) return cmd_analyze(o);
    if (*edges) return cmd_edges(o);
    if (*graph) return cmd_graph(o);
    if (*thin) return cmd_thin(o);
    if (*synth) return cmd_synth(o);
    if (*reduct) return cmd_reduct(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
