#include "idem/report.hpp"

#include <sstream>

namespace idem {

namespace {

using nlohmann::json;

json set_json(const FiniteAlgebra& a, ElemSet s) {
  json out = json::array();
  for (Elem e : s.elements()) out.push_back(a.label(e));
  return out;
}

json congruence_json(const FiniteAlgebra& a, const Congruence& theta, const std::vector<Elem>& embedding) {
  json out = json::array();
  for (const auto& block : theta.blocks()) {
    json b = json::array();
    for (Elem l : block) b.push_back(a.label(embedding[l]));
    out.push_back(b);
  }
  return out;
}

std::string_view outcome_text(EdgeWitness::Outcome o) {
  switch (o) {
    case EdgeWitness::Outcome::Labeled:
      return "labeled";
    case EdgeWitness::Outcome::NoLabel:
      return "no-label";
    case EdgeWitness::Outcome::Inconclusive:
      return "inconclusive";
  }
  return "";
}

std::string blocks_text(const json& blocks) {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "|";
    for (const auto& l : blocks[i]) out += l.get<std::string>();
  }
  return out + "}";
}

json table_json(const OperationTable& t) {
  return json{{"name", t.name()}, {"arity", t.arity()}, {"table", t.table()}};
}

json thick_json(const ThickEdge& e, const std::vector<FiniteAlgebra>& members) {
  const FiniteAlgebra& m = members[e.member];
  return json{{"member", m.name()},
              {"a", m.label(e.a)},
              {"b", m.label(e.b)},
              {"type", to_string(e.type)},
              {"subalgebra", set_json(m, e.subalgebra)},
              {"theta", e.theta},
              {"block_a", set_json(m, e.block_a)},
              {"block_b", set_json(m, e.block_b)},
              {"witness", e.witness.to_string()}};
}

}  // namespace

json report_envelope(const std::string& command) {
  return json{{"format", "idem-report"}, {"version", kReportVersion}, {"command", command}};
}

json algebra_json(const FiniteAlgebra& a) {
  json ops = json::array();
  for (const auto& op : a.operations()) ops.push_back(table_json(op));
  return json{{"name", a.name()}, {"size", a.size()}, {"labels", a.labels()}, {"operations", ops}};
}

json edge_report_json(const FiniteAlgebra& a, const EdgeReport& r) {
  json ws = json::array();
  for (const EdgeWitness& w : r.witnesses) {
    json j{{"theta", congruence_json(a, w.theta, r.embedding)},
           {"outcome", outcome_text(w.outcome)},
           {"quotient_size", w.quotient_size},
           {"quotient_kind", to_string(w.quotient_kind)}};
    if (w.label) j["type"] = to_string(*w.label);
    if (w.witness) j["term"] = w.witness->to_string();
    if (w.absorber) j["absorber"] = a.label(*w.absorber);
    ws.push_back(std::move(j));
  }
  json types = json::array();
  for (EdgeType t : r.types()) types.push_back(to_string(t));
  return json{{"a", a.label(r.a)},       {"b", a.label(r.b)},       {"subalgebra", set_json(a, r.subalgebra)},
              {"is_edge", r.is_edge},     {"unknown", r.unknown},    {"types", types},
              {"witnesses", ws}};
}

json graph_json(const FiniteAlgebra& a, const StructureGraph& g) {
  json pairs = json::array(), edges = json::array(), hyper = json::array();
  for (const auto& r : g.reports) pairs.push_back(edge_report_json(a, r));
  for (const auto& e : g.edges) edges.push_back({{"a", a.label(e.a)}, {"b", a.label(e.b)}, {"type", to_string(e.type)}});
  for (ElemSet h : g.hyperedges) hyper.push_back(set_json(a, h));
  json comps = json::array();
  for (const auto& block : connected_components(g).blocks()) {
    json b = json::array();
    for (Elem e : block) b.push_back(a.label(e));
    comps.push_back(b);
  }
  json out{{"algebra", a.name()}, {"pairs", pairs}, {"edges", edges}, {"components", comps}};
  if (!g.hyperedges.empty()) out["hyperedges"] = hyper;
  return out;
}

json thin_json(const FiniteAlgebra& a, const ThinGraph& g) {
  json arcs = json::array();
  for (const ThinEdge& e : g.arcs) {
    json j{{"from", a.label(e.a)},     {"to", a.label(e.b)},       {"kind", to_string(e.kind)},
           {"minimal", e.minimal},     {"b_block", set_json(a, e.b_block)}, {"certificate", e.certificate}};
    if (!e.theta.empty()) j["theta"] = e.theta;
    if (e.necessary) j["necessary"] = *e.necessary;
    arcs.push_back(std::move(j));
  }
  return json{{"algebra", a.name()}, {"arcs", arcs}};
}

json uniform_json(const UniformOps& u) {
  const auto& members = u.inventory.members;
  json tables = json::array();
  for (const FiniteAlgebra& m : members) {
    tables.push_back({{"member", m.name()},
                      {"f", realize_table(u.ops.f, m, "f").table()},
                      {"g", realize_table(u.ops.g, m, "g").table()},
                      {"h", realize_table(u.ops.h, m, "h").table()}});
  }
  json inv{{"semilattice", json::array()}, {"majority", json::array()}, {"affine", json::array()}};
  for (const auto& e : u.inventory.semilattice) inv["semilattice"].push_back(thick_json(e, members));
  for (const auto& e : u.inventory.majority) inv["majority"].push_back(thick_json(e, members));
  for (const auto& e : u.inventory.affine) inv["affine"].push_back(thick_json(e, members));
  json checks = json::array();
  for (const CheckOutcome& c : u.checks) {
    json j{{"condition", c.condition}, {"where", c.where}, {"ok", c.ok}};
    if (!c.tuple.empty()) j["tuple"] = c.tuple;
    checks.push_back(std::move(j));
  }
  json names = json::array();
  for (const auto& m : members) names.push_back(m.name());
  return json{{"class", names},
              {"terms",
               {{"f", u.ops.f.to_string()}, {"g", u.ops.g.to_string()}, {"h", u.ops.h.to_string()}}},
              {"dag_sizes", {{"f", u.ops.f.dag_size()}, {"g", u.ops.g.dag_size()}, {"h", u.ops.h.dag_size()}}},
              {"sls_rounds", u.ops.sls_rounds},
              {"tables", tables},
              {"thick_edges", inv},
              {"checks", checks},
              {"ok", u.ok()}};
}

json reduct_json(const BoundedReduct& r, const ReductDiff& d) {
  const FiniteAlgebra& a = r.base;
  json ops = json::array();
  for (std::size_t i = 0; i < r.algebra.operations().size(); ++i) {
    json j = table_json(r.algebra.operation(i));
    j["term"] = r.terms[i].to_string();
    ops.push_back(std::move(j));
  }
  json pairs = json::array();
  for (const auto& p : d.pairs) {
    json before = json::array(), after = json::array();
    for (EdgeType t : p.base_types) before.push_back(to_string(t));
    for (EdgeType t : p.reduct_types) after.push_back(to_string(t));
    pairs.push_back({{"a", a.label(p.a)}, {"b", a.label(p.b)}, {"base", before}, {"reduct", after}});
  }
  return json{{"algebra", a.name()},
              {"pair", {a.label(r.a), a.label(r.b)}},
              {"relation", set_json(a, r.relation)},
              {"arity_bound", r.max_arity},
              {"clone_sizes", r.clone_sizes},
              {"operations", ops},
              {"edge_diff",
               {{"pairs", pairs}, {"identical", d.identical}, {"new_unary", d.new_unary}, {"new_affine", d.new_affine}}}};
}

json suites_json(const std::vector<SuiteResult>& suites) {
  json out = json::array();
  for (const SuiteResult& s : suites) {
    out.push_back({{"name", s.name},
                   {"checked", s.checked},
                   {"ok", s.ok()},
                   {"failures", s.failures},
                   {"skipped", s.skipped}});
  }
  return out;
}

std::string edge_report_text(const FiniteAlgebra& a, const EdgeReport& r) {
  const json j = edge_report_json(a, r);
  std::ostringstream out;
  out << a.label(r.a) << a.label(r.b) << ":";
  if (!r.is_edge) out << (r.unknown ? " unknown (cap)" : " not an edge");
  for (const auto& w : j["witnesses"]) {
    out << "\n  " << blocks_text(w["theta"]) << " " << w["outcome"].get<std::string>();
    if (w.contains("type")) out << " " << w["type"].get<std::string>();
    if (w.contains("term")) out << "  t = " << w["term"].get<std::string>();
  }
  return out.str();
}

}  // namespace idem
