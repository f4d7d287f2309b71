#include "idem/thin.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "idem/genclose.hpp"

namespace idem {

namespace {

ElemSet sg_pair(const FiniteAlgebra& a, Elem x, Elem y) { return sg(a, ElemSet{x, y}); }

std::string set_text(const FiniteAlgebra& a, ElemSet s) {
  std::string out;
  for (Elem e : s.elements()) {
    if (!out.empty()) out += ",";
    out += a.label(e);
  }
  return out;
}

// θ of witness i restricted to s, as parent labels.
std::string restricted_theta(const FiniteAlgebra& a, const EdgeReport& r, std::size_t i, ElemSet s) {
  std::vector<ElemSet> blocks;
  for (Elem e : s.elements()) {
    const ElemSet b = r.block(i, e) & s;
    if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(b);
  }
  std::string out = "{";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += "|";
    out += set_text(a, blocks[k]);
  }
  return out + "}";
}

}  // namespace

std::optional<Term> binary_witness(const FiniteAlgebra& a, Elem x, Elem y, Elem target) {
  const GenerationTrace trace = generate_subalgebra(a, std::vector<Elem>{x, y});
  if (!trace.universe.contains(target)) return std::nullopt;
  const Term t = witness_term(trace, a, target);
  if (t.arity() == 2) return t;
  return compose(t, {proj(0, 2)});
}

SlsResult synth_sls(const std::vector<FiniteAlgebra>& members, const Term& f0) {
  if (f0.arity() != 2) throw Error(ErrorKind::ArityMismatch, "SLS needs a binary term");
  std::uint64_t rounds = 0;
  for (const FiniteAlgebra& m : members) {
    const OperationTable f = realize_table(f0, m);
    for (Elem a = 0; a < m.size(); ++a) {
      for (Elem b = 0; b < m.size(); ++b) {
        Elem bi = f({a, b});
        if (bi == a) continue;
        ElemSet cur = sg_pair(m, a, bi);
        for (std::uint64_t k = 0;; ++k) {
          const Elem next = f({a, f({bi, a})});
          const ElemSet nxt = sg_pair(m, a, next);
          if (nxt == cur) {
            rounds = std::max(rounds, k);
            break;
          }
          bi = next;
          cur = nxt;
        }
      }
    }
  }
  const Term x = proj(0, 2);
  const Term y = proj(1, 2);
  const Term step = compose(f0, {x, compose(f0, {y, x})});
  const Term out = iterate({x, step}, {x, f0}, rounds, 1);
  for (const FiniteAlgebra& m : members) {
    const OperationTable f = realize_table(out, m);
    for (Elem a = 0; a < m.size(); ++a) {
      for (Elem b = 0; b < m.size(); ++b) {
        const Elem c = f({a, b});
        if (c != a && (f({a, c}) != c || f({c, a}) != c)) {
          throw Error(ErrorKind::PostconditionFailed, "SLS fails on " + m.name() + " at (" + m.label(a) + "," +
                                                          m.label(b) + ")");
        }
      }
    }
  }
  return {out, rounds};
}

SlsResult synth_sls(const FiniteAlgebra& a, const Term& f0) { return synth_sls(std::vector<FiniteAlgebra>{a}, f0); }

std::vector<std::pair<Elem, Elem>> thin_semilattice_order(const FiniteAlgebra& a, const Term& f) {
  const OperationTable t = realize_table(f, a);
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (x != y && t({x, y}) == y && t({y, x}) == y) out.emplace_back(x, y);
    }
  }
  return out;
}

bool is_minimal_pair(const FiniteAlgebra& a, Elem x, Elem y, ElemSet y_block) {
  for (Elem z : y_block.elements()) {
    if (!sg_pair(a, x, z).contains(y)) return false;
  }
  return true;
}

bool is_minimal_pair(const FiniteAlgebra& a, const EdgeReport& report, std::size_t i, Elem x, Elem y) {
  const ElemSet s = sg_pair(a, x, y);
  return is_minimal_pair(a, x, y, report.block(i, y) & s);
}

std::string_view to_string(ThinKind kind) {
  switch (kind) {
    case ThinKind::ThinSemilattice:
      return "thin-semilattice";
    case ThinKind::SpecialThinMajority:
      return "special-thin-majority";
    case ThinKind::ThinAffine:
      return "thin-affine";
  }
  return "?";
}

std::vector<ThinEdge> find_special_thin_majority(const FiniteAlgebra& a, const EdgeReport& report, std::size_t i) {
  if (report.witnesses.at(i).label != EdgeType::Majority) {
    throw Error(ErrorKind::PreconditionViolated, "witness is not a majority witness");
  }
  std::vector<ThinEdge> out;
  for (auto [from, to] : {std::pair{report.a, report.b}, std::pair{report.b, report.a}}) {
    bool from_start = false;
    for (Elem c : report.block(i, from).elements()) {
      for (Elem d : report.block(i, to).elements()) {
        if (!is_minimal_pair(a, report, i, c, d)) continue;
        const ElemSet s = sg_pair(a, c, d);
        ThinEdge e;
        e.a = c;
        e.b = d;
        e.kind = ThinKind::SpecialThinMajority;
        e.theta = restricted_theta(a, report, i, s);
        e.b_block = report.block(i, d) & s;
        e.minimal = true;
        e.certificate = "minimal w.r.t. " + e.theta + " on Sg{" + a.label(c) + "," + a.label(d) + "}";
        out.push_back(std::move(e));
        from_start = from_start || c == from;
      }
    }
    if (!from_start) {
      throw Error(ErrorKind::EmptyResult, "no minimal pair starting at " + a.label(from) + " in majority edge " +
                                              a.label(report.a) + a.label(report.b));
    }
  }
  return out;
}

std::vector<ThinEdge> find_thin_affine(const FiniteAlgebra& a, const EdgeReport& report, std::size_t i,
                                       const Term& h) {
  if (report.witnesses.at(i).label != EdgeType::Affine) {
    throw Error(ErrorKind::PreconditionViolated, "witness is not an affine witness");
  }
  const OperationTable ht = realize_table(h, a);
  std::vector<ThinEdge> out;
  for (auto [from, to] : {std::pair{report.a, report.b}, std::pair{report.b, report.a}}) {
    const ElemSet block = report.block(i, to);
    std::vector<Elem> found;
    for (Elem b2 : block.elements()) {
      if (!is_minimal_pair(a, report, i, from, b2)) continue;
      const Elem b1 = ht({b2, from, from});
      if (!block.contains(b1) || ht({b1, from, from}) != b1) continue;
      if (!is_minimal_pair(a, report, i, from, b1)) continue;
      if (std::find(found.begin(), found.end(), b1) != found.end()) continue;
      found.push_back(b1);
      const ElemSet s = sg_pair(a, from, b1);
      ThinEdge e;
      e.a = from;
      e.b = b1;
      e.kind = ThinKind::ThinAffine;
      e.theta = restricted_theta(a, report, i, s);
      e.b_block = block & s;
      e.minimal = true;
      e.certificate = "h(" + a.label(b2) + "," + a.label(from) + "," + a.label(from) + ")=" + a.label(b1) +
                      ", fixed by h(x,a,a); minimal w.r.t. " + e.theta;
      out.push_back(std::move(e));
    }
    if (found.empty()) {
      throw Error(ErrorKind::EmptyResult, "no thin affine edge from " + a.label(from) + " in affine edge " +
                                              a.label(report.a) + a.label(report.b));
    }
  }
  return out;
}

bool check_thin_necessary(const FiniteAlgebra& a, Elem x, Elem y, ThinKind kind, const DistinguishedOps& ops) {
  switch (kind) {
    case ThinKind::ThinSemilattice:
      return eval(ops.f, a, {x, y}) == y && eval(ops.f, a, {y, x}) == y;
    case ThinKind::SpecialThinMajority:
      for (Elem v : {eval(ops.g, a, {x, y, y}), eval(ops.g, a, {y, x, y}), eval(ops.g, a, {y, y, x})}) {
        if (!sg_pair(a, x, v).contains(y)) return false;
      }
      return true;
    case ThinKind::ThinAffine:
      return eval(ops.h, a, {y, x, x}) == y && sg_pair(a, x, eval(ops.h, a, {x, x, y})).contains(y);
  }
  return false;
}

ThinGraph thin_graph(const FiniteAlgebra& a, const StructureGraph& g, const DistinguishedOps& ops) {
  ThinGraph tg;
  tg.size = a.size();
  tg.labels = g.labels;
  std::map<std::tuple<Elem, Elem, ThinKind>, ThinEdge> arcs;
  for (auto [x, y] : thin_semilattice_order(a, ops.f)) {
    ThinEdge e;
    e.a = x;
    e.b = y;
    e.kind = ThinKind::ThinSemilattice;
    e.b_block = ElemSet{y};
    e.minimal = true;
    e.certificate = "f(a,b)=f(b,a)=b";
    arcs.emplace(std::tuple{x, y, e.kind}, std::move(e));
  }
  for (const EdgeReport& r : g.reports) {
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      std::vector<ThinEdge> found;
      if (r.witnesses[i].label == EdgeType::Majority) {
        found = find_special_thin_majority(a, r, i);
      } else if (r.witnesses[i].label == EdgeType::Affine) {
        found = find_thin_affine(a, r, i, ops.h);
      }
      for (ThinEdge& e : found) arcs.emplace(std::tuple{e.a, e.b, e.kind}, std::move(e));
    }
  }
  for (auto& [key, e] : arcs) {
    e.necessary = check_thin_necessary(a, e.a, e.b, e.kind, ops);
    tg.arcs.push_back(std::move(e));
  }
  return tg;
}

ThinGraph thin_graph(const FiniteAlgebra& a, const DistinguishedOps& ops, const Limits& limits) {
  return thin_graph(a, structure_graph(a, limits), ops);
}

}  // namespace idem
