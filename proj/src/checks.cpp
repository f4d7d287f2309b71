#include "idem/checks.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "idem/congruence.hpp"
#include "idem/edges.hpp"
#include "idem/fixtures.hpp"
#include "idem/genclose.hpp"
#include "idem/io.hpp"
#include "idem/reduct.hpp"
#include "idem/thin.hpp"

namespace idem {

namespace {

std::string pair_text(const FiniteAlgebra& a, Elem x, Elem y) { return a.label(x) + a.label(y); }

std::string set_text(const FiniteAlgebra& a, ElemSet s) {
  std::string out = "{";
  for (Elem e : s.elements()) out += (out.size() > 1 ? "," : "") + a.label(e);
  return out + "}";
}

std::string types_text(const std::vector<EdgeType>& ts) {
  std::string out;
  for (EdgeType t : ts) out += (out.empty() ? "" : "+") + std::string(to_string(t));
  return out.empty() ? "none" : out;
}

void expect(SuiteResult& r, bool ok, const std::string& msg) {
  ++r.checked;
  if (!ok) r.failures.push_back(msg);
}

/// Components of H(A) as a partition.
Congruence h_components(const FiniteAlgebra& a, const Limits& limits) {
  return connected_components(hypergraph(a, limits));
}

bool is_majority_on(const OperationTable& t, Elem p, Elem q) {
  for (Elem x : {p, q}) {
    for (Elem y : {p, q}) {
      if (t({x, x, y}) != x || t({x, y, x}) != x || t({y, x, x}) != x) return false;
    }
  }
  return true;
}

ThinKind thin_kind(EdgeType t) {
  switch (t) {
    case EdgeType::Semilattice:
      return ThinKind::ThinSemilattice;
    case EdgeType::Majority:
      return ThinKind::SpecialThinMajority;
    default:
      return ThinKind::ThinAffine;
  }
}

std::string edge_text(const UniformOps& u, const MemberEdge& e) {
  const FiniteAlgebra& m = u.inventory.members[e.member];
  return m.name() + ":" + pair_text(m, e.a, e.b) + "[" + std::string(to_string(e.kind)) + "]";
}

}  // namespace

SuiteResult suite_connectedness(const FiniteAlgebra& a, const Limits& limits) {
  SuiteResult r{"connectedness " + a.name()};
  for (ElemSet b : all_subalgebras(a, limits)) {
    const Subalgebra sub = restrict(a, b);
    const StructureGraph g = structure_graph(sub.algebra, limits);
    bool unknown = std::any_of(g.reports.begin(), g.reports.end(), [](const EdgeReport& e) { return e.unknown; });
    if (!is_connected(g) && unknown) {
      r.skipped.push_back("G" + set_text(a, b) + " undecided at cap");
      continue;
    }
    expect(r, is_connected(g), "G" + set_text(a, b) + " is disconnected");
  }
  return r;
}

SuiteResult suite_tolerance_classes(const std::vector<FiniteAlgebra>& algebras, std::size_t count,
                                    std::uint64_t seed) {
  SuiteResult r{"tolerance classes"};
  if (algebras.empty()) return r;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const FiniteAlgebra& a = algebras[i % algebras.size()];
    const std::size_t n = a.size();
    std::vector<ElemPair> pairs;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) pairs.emplace_back(static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n));
    const ToleranceResult t = tolerance_ops(a, pairs);
    const std::string where = a.name() + " tolerance #" + std::to_string(i);
    expect(r, t.tolerance.is_reflexive() && t.tolerance.is_symmetric(), where + " not reflexive and symmetric");
    expect(r, is_compatible(a, t.tolerance), where + " not compatible");
    for (const auto& [x, y] : pairs) expect(r, t.tolerance.related(x, y), where + " misses a generating pair");
    ElemSet covered;
    for (ElemSet c : t.classes) {
      covered = covered | c;
      expect(r, is_subuniverse(a, c), where + " class " + set_text(a, c) + " not closed");
      for (Elem x : c.elements()) {
        for (Elem y : c.elements()) expect(r, t.tolerance.related(x, y), where + " class is not a clique");
      }
    }
    expect(r, covered == ElemSet::full(n), where + " classes do not cover A");
  }
  return r;
}

SuiteResult suite_link_tolerance(const FiniteAlgebra& a, std::uint64_t seed) {
  SuiteResult r{"link tolerance " + a.name()};
  std::mt19937_64 rng(seed);
  const std::size_t n = a.size();
  for (int round = 0; round < 20; ++round) {
    std::vector<std::vector<Elem>> gens;
    for (Elem x = 0; x < n; ++x) gens.push_back({x, x});
    const std::size_t extra = 1 + rng() % 2;
    for (std::size_t j = 0; j < extra; ++j) {
      gens.push_back({static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n)});
    }
    TupleClosure closure(a, 2, gens, 1'000'000);
    closure.run();
    std::vector<std::vector<Elem>> rel;
    for (std::size_t i = 0; i < closure.size(); ++i) rel.push_back(closure.tuple(i));
    for (std::size_t i = 0; i < 2; ++i) {
      const Tolerance t = link_tolerance(a, rel, i);
      expect(r, is_compatible(a, t), a.name() + " link tolerance " + std::to_string(i) + " of round " +
                                         std::to_string(round) + " not compatible");
    }
  }
  return r;
}

SuiteResult suite_edge_factor(const FiniteAlgebra& a, const Limits& limits) {
  SuiteResult r{"edge-factor " + a.name()};
  const Congruence components = h_components(a, limits);
  for (const Congruence& alpha : congruence_lattice(a, limits)) {
    if (alpha.is_equality() || alpha.is_total()) continue;
    const Quotient q = quotient(a, alpha);
    const FiniteAlgebra& qa = q.algebra;
    const auto blocks = alpha.blocks();
    for (Elem p = 0; p < qa.size(); ++p) {
      for (Elem s = p + 1; s < qa.size(); ++s) {
        const EdgeReport qr = classify_pair(qa, p, s, limits.node_cap);
        if (!qr.is_edge) continue;
        for (Elem x : blocks[p]) {
          for (Elem y : blocks[s]) {
            const EdgeReport er = classify_pair(a, x, y, limits.node_cap);
            for (EdgeType t : qr.types()) {
              expect(r, er.has_type(t),
                     a.name() + "/" + alpha.to_string() + ": " + std::string(to_string(t)) + " edge of blocks does not lift to " +
                         pair_text(a, x, y) + " (types " + types_text(er.types()) + ")");
            }
          }
        }
      }
    }
    if (is_connected(hypergraph(qa, limits))) {
      expect(r, components.is_total(), a.name() + ": H(A/" + alpha.to_string() + ") connected but H(A) is not");
    }
  }
  return r;
}

SuiteResult suite_edge_subalgebra(const FiniteAlgebra& a, const Limits& limits) {
  SuiteResult r{"edge-subalgebra " + a.name()};
  const StructureGraph whole = structure_graph(a, limits);
  const Congruence components = h_components(a, limits);
  auto report_of = [&](Elem x, Elem y) -> const EdgeReport& {
    for (const EdgeReport& e : whole.reports) {
      if (e.a == std::min(x, y) && e.b == std::max(x, y)) return e;
    }
    throw Error(ErrorKind::PostconditionFailed, "missing pair");
  };
  for (ElemSet b : all_subalgebras(a, limits)) {
    if (b.size() < 2 || b.size() == a.size()) continue;
    const Subalgebra sub = restrict(a, b);
    const StructureGraph g = structure_graph(sub.algebra, limits);
    for (const EdgeReport& e : g.reports) {
      const Elem x = sub.embedding[e.a], y = sub.embedding[e.b];
      const EdgeReport& p = report_of(x, y);
      expect(r, e.is_edge == p.is_edge && e.types() == p.types(),
             "in " + set_text(a, b) + " pair " + pair_text(a, x, y) + " has types " + types_text(e.types()) +
                 ", in A " + types_text(p.types()));
    }
    const Congruence local = h_components(sub.algebra, limits);
    for (Elem x = 0; x < sub.algebra.size(); ++x) {
      for (Elem y = x + 1; y < sub.algebra.size(); ++y) {
        if (!local.related(x, y)) continue;
        expect(r, components.related(sub.embedding[x], sub.embedding[y]),
               pair_text(a, sub.embedding[x], sub.embedding[y]) + " connected in H" + set_text(a, b) +
                   " but not in H(A)");
      }
    }
  }
  return r;
}

SuiteResult suite_many_edges(const FiniteAlgebra& a, const Limits& limits) {
  SuiteResult r{"many-edges " + a.name()};
  const StructureGraph g = structure_graph(a, limits);
  auto report_of = [&](Elem x, Elem y) -> const EdgeReport& {
    for (const EdgeReport& e : g.reports) {
      if (e.a == std::min(x, y) && e.b == std::max(x, y)) return e;
    }
    throw Error(ErrorKind::PostconditionFailed, "missing pair");
  };
  for (const EdgeReport& e : g.reports) {
    for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
      const auto& label = e.witnesses[i].label;
      if (!label) continue;
      for (Elem c : e.block(i, e.a).elements()) {
        for (Elem d : e.block(i, e.b).elements()) {
          expect(r, report_of(c, d).has_type(*label),
                 pair_text(a, c, d) + " lacks the " + std::string(to_string(*label)) + " type of " +
                     pair_text(a, e.a, e.b));
        }
      }
    }
  }
  return r;
}

SuiteResult suite_smoothness(const FiniteAlgebra& a, const Limits& limits) {
  SuiteResult r{"smoothness " + a.name()};
  const auto v = smoothness_violation(a, limits);
  expect(r, !v, v ? a.name() + ": thick " + std::string(to_string(v->type)) + " edge " + pair_text(a, v->a, v->b) +
                        " is not a subuniverse"
                  : "");
  return r;
}

SuiteResult suite_sls(const UniformOps& u) {
  SuiteResult r{"SLS"};
  for (const FiniteAlgebra& m : u.inventory.members) {
    const OperationTable f = realize_table(u.ops.f, m);
    for (Elem a = 0; a < m.size(); ++a) {
      for (Elem b = 0; b < m.size(); ++b) {
        const Elem v = f({a, b});
        expect(r, v == a || (f({a, v}) == v && f({v, a}) == v),
               m.name() + ": f(" + pair_text(m, a, b) + ") breaks SLS");
      }
    }
  }
  for (const ThickEdge& e : u.inventory.semilattice) {
    const OperationTable f = realize_table(u.ops.f, e.quotient);
    const Elem ab = f({e.qa, e.qb});
    expect(r, ab == f({e.qb, e.qa}) && (ab == e.qa || ab == e.qb),
           "f not semilattice on " + e.describe(u.inventory.members));
  }
  return r;
}

SuiteResult suite_uniform(const UniformOps& u) {
  SuiteResult r{"uniform conditions"};
  for (const CheckOutcome& c : verify_uniform(u.inventory, u.ops)) {
    std::string tuple;
    for (Elem e : c.tuple) tuple += (tuple.empty() ? "" : ",") + std::to_string(e);
    expect(r, c.ok, c.condition + " at " + c.where + (tuple.empty() ? "" : " (" + tuple + ")"));
  }
  return r;
}

SuiteResult suite_thin_edges(const UniformOps& u) {
  SuiteResult r{"thin edges"};
  const auto& members = u.inventory.members;
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    const FiniteAlgebra& m = members[mi];
    const StructureGraph& g = u.inventory.graphs[mi];
    const ThinGraph tg = thin_graph(m, g, u.ops);
    for (const ThinEdge& e : tg.arcs) {
      expect(r, e.necessary.value_or(false),
             m.name() + ": thin " + std::string(to_string(e.kind)) + " " + pair_text(m, e.a, e.b) +
                 " fails the necessary conditions");
      expect(r, check_thin_necessary(m, e.a, e.b, e.kind, u.ops),
             m.name() + ": recheck of " + pair_text(m, e.a, e.b) + " failed");
    }
    for (const EdgeReport& rep : g.reports) {
      for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
        const auto& label = rep.witnesses[i].label;
        if (!label || *label == EdgeType::Semilattice || *label == EdgeType::Unary) continue;
        const std::string where = m.name() + ": " + pair_text(m, rep.a, rep.b) + " via " +
                                  rep.witnesses[i].theta.to_string();
        try {
          const auto edges = *label == EdgeType::Majority ? find_special_thin_majority(m, rep, i)
                                                          : find_thin_affine(m, rep, i, u.ops.h);
          const ElemSet bb = rep.block(i, rep.b);
          const bool from_a = std::any_of(edges.begin(), edges.end(), [&](const ThinEdge& e) {
            return e.a == rep.a && bb.contains(e.b) && e.kind == thin_kind(*label);
          });
          expect(r, from_a, where + ": no thin edge from a into b/θ");
          for (const ThinEdge& e : edges) {
            const bool listed = std::any_of(tg.arcs.begin(), tg.arcs.end(), [&](const ThinEdge& t) {
              return t.a == e.a && t.b == e.b && t.kind == e.kind;
            });
            expect(r, listed, where + ": thin edge " + pair_text(m, e.a, e.b) + " missing from the thin graph");
          }
        } catch (const Error& err) {
          expect(r, false, where + ": " + err.what());
        }
      }
    }
  }
  const auto& semis = u.inventory.semilattice;
  for (const ThickEdge& e : semis) {
    const FiniteAlgebra& m = members[e.member];
    const OperationTable f = realize_table(u.ops.f, m);
    const Elem top = realize_table(u.ops.f, e.quotient)({e.qa, e.qb});
    const ElemSet lower = top == e.qb ? e.block_a : e.block_b;
    const ElemSet upper = top == e.qb ? e.block_b : e.block_a;
    for (Elem c : lower.elements()) {
      bool found = false;
      for (Elem d : upper.elements()) found = found || (f({c, d}) == d && f({d, c}) == d);
      expect(r, found, e.describe(members) + ": no thin semilattice edge from " + m.label(c));
    }
  }
  return r;
}

SuiteResult suite_thin_constructions(const UniformOps& u) {
  SuiteResult r{"thin constructions"};
  const auto& members = u.inventory.members;
  std::vector<MemberEdge> maj, aff, all;
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    for (const ThinEdge& e : thin_graph(members[mi], u.inventory.graphs[mi], u.ops).arcs) {
      MemberEdge me{mi, e.a, e.b, e.kind};
      all.push_back(me);
      if (e.kind == ThinKind::SpecialThinMajority) maj.push_back(me);
      if (e.kind == ThinKind::ThinAffine) aff.push_back(me);
    }
  }
  auto run = [&](const std::string& what, auto&& body) {
    try {
      body();
    } catch (const Error& err) {
      expect(r, false, what + ": " + err.what());
    }
  };
  for (const MemberEdge& e1 : maj) {
    for (const MemberEdge& e2 : maj) {
      for (const MemberEdge& e3 : maj) {
        const std::string what = "majority triple " + edge_text(u, e1) + " " + edge_text(u, e2) + " " + edge_text(u, e3);
        run(what, [&] {
          const Term g = majority_triple(u, e1, e2, e3);
          expect(r, eval(g, members[e1.member], {e1.a, e1.b, e1.b}) == e1.b, what + ": g(a1,b1,b1)");
          expect(r, eval(g, members[e2.member], {e2.b, e2.a, e2.b}) == e2.b, what + ": g(b2,a2,b2)");
          expect(r, eval(g, members[e3.member], {e3.b, e3.b, e3.a}) == e3.b, what + ": g(b3,b3,a3)");
          for (const ThickEdge& c : u.inventory.majority) {
            expect(r, is_majority_on(realize_table(g, c.quotient), c.qa, c.qb),
                   what + ": not majority on " + c.describe(members));
          }
        });
      }
    }
  }
  for (const MemberEdge& e1 : aff) {
    for (const MemberEdge& e2 : aff) {
      const std::string what = "affine pair " + edge_text(u, e1) + " " + edge_text(u, e2);
      run(what, [&] {
        const Term h = affine_pair(u, e1, e2);
        expect(r, eval(h, members[e1.member], {e1.b, e1.a, e1.a}) == e1.b, what + ": h(b,a,a)");
        expect(r, eval(h, members[e2.member], {e2.a, e2.a, e2.b}) == e2.b, what + ": h(c,c,d)");
      });
    }
  }
  for (const MemberEdge& e1 : all) {
    for (const MemberEdge& e2 : all) {
      if (e1.kind == e2.kind) continue;
      const std::string what = "mixed pair " + edge_text(u, e1) + " " + edge_text(u, e2);
      run(what, [&] {
        const Term p = mixed_pair(u, e1, e2);
        expect(r, eval(p, members[e1.member], {e1.b, e1.a}) == e1.b, what + ": p(b,a)");
        expect(r, eval(p, members[e2.member], {e2.a, e2.b}) == e2.b, what + ": p(c,d)");
      });
    }
  }
  for (const MemberEdge& e : all) {
    if (e.kind == ThinKind::ThinSemilattice) continue;
    const std::string what = "stable op " + edge_text(u, e);
    run(what, [&] {
      const Term t = affine_stable_op(u, e);
      const FiniteAlgebra& m = members[e.member];
      if (e.kind == ThinKind::SpecialThinMajority) {
        expect(r, eval(t, m, {e.a, e.b}) == e.b, what + ": t(a,b)");
        for (const ThickEdge& d : u.inventory.affine) {
          const OperationTable tt = realize_table(t, d.quotient);
          for (Elem x = 0; x < d.quotient.size(); ++x) {
            for (Elem y = 0; y < d.quotient.size(); ++y) {
              expect(r, tt({x, y}) == x, what + ": not first projection on " + d.describe(members));
            }
          }
        }
      } else {
        expect(r, eval(t, m, {e.a, e.a, e.b}) == e.b, what + ": h(a,a,b)");
        for (const ThickEdge& d : u.inventory.affine) {
          const OperationTable tt = realize_table(t, d.quotient);
          for (Elem x = 0; x < d.quotient.size(); ++x) {
            for (Elem y = 0; y < d.quotient.size(); ++y) {
              expect(r, tt({x, y, y}) == x, what + ": h(d,c,c) != d on " + d.describe(members));
            }
          }
        }
      }
    });
  }
  return r;
}

SuiteResult suite_thin_thick_colors(const UniformOps& u) {
  SuiteResult r{"thin-thick colors"};
  std::set<ThinKind> thin;
  const auto& members = u.inventory.members;
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    for (const ThinEdge& e : thin_graph(members[mi], u.inventory.graphs[mi], u.ops).arcs) thin.insert(e.kind);
  }
  const std::pair<ThinKind, bool> thick[] = {{ThinKind::ThinSemilattice, !u.inventory.semilattice.empty()},
                                             {ThinKind::SpecialThinMajority, !u.inventory.majority.empty()},
                                             {ThinKind::ThinAffine, !u.inventory.affine.empty()}};
  for (const auto& [kind, has_thick] : thick) {
    expect(r, thin.contains(kind) == has_thick,
           std::string(to_string(kind)) + (has_thick ? ": thick edge without thin edge" : ": thin edge without thick edge"));
  }
  return r;
}

SuiteResult suite_reduct(const FiniteAlgebra& a, const Limits& limits) {
  SuiteResult r{"reduct " + a.name()};
  const StructureGraph g = structure_graph(a, limits);
  const EdgeReport* report = nullptr;
  std::size_t witness = 0;
  for (const EdgeReport& e : g.reports) {
    for (std::size_t i = 0; i < e.witnesses.size() && !report; ++i) {
      const auto& l = e.witnesses[i].label;
      if (l && (*l == EdgeType::Semilattice || *l == EdgeType::Majority)) {
        report = &e;
        witness = i;
      }
    }
    if (report) break;
  }
  if (!report) {
    r.skipped.push_back(a.name() + ": no semilattice or majority edge");
    return r;
  }
  const std::size_t arity = a.size() <= 4 ? 3 : 2;
  std::optional<BoundedReduct> reduct;
  try {
    reduct = bounded_reduct(a, *report, witness, arity, limits.node_cap);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::CapExceeded) throw;
    r.skipped.push_back(a.name() + ": " + err.what());
    return r;
  }
  const BoundedReduct& red = *reduct;
  const FiniteAlgebra& b = red.algebra;
  for (std::size_t i = 0; i < b.operations().size(); ++i) {
    const OperationTable& op = b.operation(i);
    expect(r, realize_table(red.terms[i], a).table() == op.table(), op.name() + " differs from its term");
    bool preserved = true;
    const std::size_t n = a.size();
    for (std::size_t idx = 0; idx < op.table().size() && preserved; ++idx) {
      const auto args = tuple_at(idx, op.arity(), n);
      const bool inside = std::all_of(args.begin(), args.end(), [&](Elem e) { return red.relation.contains(e); });
      preserved = !inside || red.relation.contains(op.at(idx));
    }
    expect(r, preserved, op.name() + " does not preserve the relation");
  }
  if (arity == 3) {
    std::set<std::vector<Elem>> ternary;
    for (const auto& op : b.operations()) {
      if (op.arity() == 3) ternary.insert(op.table());
    }
    for (const auto& op : b.operations()) {
      if (op.arity() != 2) continue;
      std::vector<Elem> lifted;
      for (std::size_t idx = 0; idx < checked_pow(a.size(), 3); ++idx) {
        const auto t = tuple_at(idx, 3, a.size());
        lifted.push_back(op({t[0], t[1]}));
      }
      expect(r, ternary.contains(lifted), op.name() + " has no ternary counterpart");
    }
    const std::set<EdgeType> sm{EdgeType::Semilattice, EdgeType::Majority};
    if (!x_connected(a, sm, limits)) {
      const auto c = x_connected(b, sm, limits);
      expect(r, !c, c ? "reduct loses {semilattice,majority}-connectivity at " + pair_text(a, c->a, c->b) : "");
    }
  } else {
    r.skipped.push_back(a.name() + ": connectivity of the reduct checked only at arity 3");
  }
  return r;
}

SuiteResult suite_round_trip(const FiniteAlgebra& a) {
  SuiteResult r{"round trip " + a.name()};
  const AlgebraDescription d = a.describe();
  const AlgebraDescription back = parse_algebra_text(serialize_algebra(d));
  expect(r, back == d, a.name() + ": text round trip changed the algebra");
  return r;
}

SuiteResult suite_example_no_edge() {
  SuiteResult r{"example no-edge"};
  const FiniteAlgebra a = fixtures::no_edge();
  const EdgeReport ac = classify_pair(a, 0, 2), bc = classify_pair(a, 1, 2), ab = classify_pair(a, 0, 1);
  expect(r, ac.types() == std::vector{EdgeType::Semilattice}, "ac has types " + types_text(ac.types()));
  expect(r, bc.types() == std::vector{EdgeType::Semilattice}, "bc has types " + types_text(bc.types()));
  expect(r, !ab.is_edge && !ab.unknown, "ab is not a decided non-edge");
  expect(r, congruence_lattice(a).size() == 2, "congruence lattice is not {0, 1}");
  expect(r, is_connected(structure_graph(a)), "G(A) is disconnected");
  return r;
}

SuiteResult suite_example_no_edge_factor() {
  SuiteResult r{"example no-edge-factor"};
  const FiniteAlgebra c = fixtures::no_edge_factor();
  const Elem x = pair_element(0, 0, 2), y = pair_element(1, 1, 2);
  std::vector<std::size_t> first(c.size()), second(c.size());
  for (Elem e = 0; e < c.size(); ++e) {
    first[e] = e / 2;
    second[e] = e % 2;
  }
  const Congruence pi1 = Congruence::from_labels(first), pi2 = Congruence::from_labels(second);
  const EdgeReport rep = classify_pair(c, x, y);
  expect(r, rep.subalgebra == ElemSet::full(c.size()), "Sg{(a,0),(b,1)} is not C");
  bool pi2_majority = false, pi1_seen = false, pi1_label = false;
  for (const EdgeWitness& w : rep.witnesses) {
    if (w.theta == pi2) pi2_majority = w.label == EdgeType::Majority;
    if (w.theta == pi1) {
      pi1_seen = true;
      pi1_label = w.outcome != EdgeWitness::Outcome::NoLabel;
    }
  }
  expect(r, pi2_majority, "the kernel of the second projection does not witness Majority");
  expect(r, pi1_seen && !pi1_label, "the kernel of the first projection is not a maximal congruence without label");
  expect(r, find_isomorphism(quotient(c, pi1).algebra, fixtures::no_edge_prime()).has_value(),
         "C/ker(first projection) is not isomorphic to A'");
  return r;
}

SuiteResult suite_example_no_majority_symmetry(std::size_t cap) {
  SuiteResult r{"example no-majority-symmetry"};
  const FiniteAlgebra a = fixtures::no_majority_symmetry();
  const Congruence theta = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
  const auto maximal = maximal_congruences(a);
  expect(r, std::find(maximal.begin(), maximal.end(), theta) != maximal.end(), "θ is not a maximal congruence");
  for (Elem x : {0, 2}) {
    for (Elem y : {1, 3}) {
      const EdgeReport rep = classify_pair(a, x, y, cap);
      bool via_theta = false;
      for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
        const EdgeWitness& w = rep.witnesses[i];
        via_theta = via_theta || (w.label == EdgeType::Majority && rep.block(i, x) == (ElemSet{0, 2} & rep.subalgebra) &&
                                  rep.block(i, y) == (ElemSet{1, 3} & rep.subalgebra));
      }
      expect(r, via_theta, pair_text(a, x, y) + " is not a Majority edge via θ");
      const PairWitness pw = find_pair_witness(a, WitnessKind::Majority, x, y, cap);
      std::string got = pw.status == SubpowerAnswer::Status::Found    ? "Found " + pw.witness->to_string()
                        : pw.status == SubpowerAnswer::Status::Absent ? "Absent"
                                                                      : "CapExceeded";
      expect(r, pw.status == SubpowerAnswer::Status::Absent,
             "majority term on " + pair_text(a, x, y) + ": expected Absent, got " + got);
    }
  }
  return r;
}

std::vector<SuiteResult> algebra_suites(const FiniteAlgebra& a, std::uint64_t seed, const Limits& limits) {
  std::vector<SuiteResult> out;
  out.push_back(suite_round_trip(a));
  out.push_back(suite_connectedness(a, limits));
  out.push_back(suite_tolerance_classes({a}, 50, seed));
  out.push_back(suite_link_tolerance(a, seed));
  out.push_back(suite_edge_factor(a, limits));
  out.push_back(suite_edge_subalgebra(a, limits));
  out.push_back(suite_many_edges(a, limits));
  out.push_back(suite_smoothness(a, limits));
  for (SuiteResult& s : class_suites({a}, limits)) out.push_back(std::move(s));
  out.push_back(suite_reduct(a, limits));
  return out;
}

std::vector<SuiteResult> fixture_suites(const std::string& fixture, std::uint64_t seed, const Limits& limits) {
  std::vector<SuiteResult> out = algebra_suites(fixtures::by_name(fixture), seed, limits);
  if (fixture == "no-edge") out.push_back(suite_example_no_edge());
  if (fixture == "no-edge-factor") out.push_back(suite_example_no_edge_factor());
  if (fixture == "no-majority-symmetry") out.push_back(suite_example_no_majority_symmetry(limits.node_cap));
  return out;
}

std::vector<SuiteResult> class_suites(const std::vector<FiniteAlgebra>& algebras, const Limits& limits) {
  std::vector<SuiteResult> out;
  std::string names;
  for (const auto& a : algebras) names += (names.empty() ? "" : ",") + a.name();
  UniformOps u;
  try {
    u = uniform_ops(algebras, limits);
  } catch (const Error& err) {
    SuiteResult s{"uniform ops {" + names + "}"};
    expect(s, false, err.what());
    out.push_back(std::move(s));
    return out;
  }
  for (SuiteResult s : {suite_uniform(u), suite_sls(u), suite_thin_edges(u), suite_thin_constructions(u),
                        suite_thin_thick_colors(u)}) {
    s.name += " {" + names + "}";
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace idem
