#include "idem/synth.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "idem/genclose.hpp"

namespace idem {

namespace {

Term P(std::size_t i, std::size_t k) { return proj(i, k); }

std::string labels_of(const FiniteAlgebra& a, ElemSet s) {
  std::string out;
  for (Elem e : s.elements()) {
    if (!out.empty()) out += ",";
    out += a.label(e);
  }
  return out;
}

std::string tuple_text(const std::vector<Elem>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

// θ in parent labels.
std::string theta_text(const FiniteAlgebra& a, const Congruence& theta, const std::vector<Elem>& embedding) {
  std::string out = "{";
  bool first = true;
  for (const auto& b : theta.blocks()) {
    if (!first) out += "|";
    first = false;
    ElemSet parent;
    for (Elem l : b) parent.insert(embedding[l]);
    out += labels_of(a, parent);
  }
  return out + "}";
}

bool majority_on(const OperationTable& t, Elem a, Elem b) {
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    if (t({x, x, y}) != x || t({x, y, x}) != x || t({y, x, x}) != x) return false;
  }
  return true;
}

bool maltsev_on(const OperationTable& t, std::size_t n) {
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (t({x, y, y}) != x || t({y, y, x}) != x) return false;
    }
  }
  return true;
}

bool first_projection_on(const OperationTable& t, ElemSet s) {
  const auto elems = s.elements();
  std::vector<Elem> args(t.arity(), 0);
  std::vector<std::size_t> idx(t.arity(), 0);
  while (true) {
    for (std::size_t i = 0; i < args.size(); ++i) args[i] = elems[idx[i]];
    if (t(args) != args[0]) return false;
    std::size_t i = args.size();
    while (i > 0 && ++idx[i - 1] == elems.size()) idx[--i] = 0;
    if (i == 0) return true;
  }
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t l = std::lcm(a, b);
  if (l > (std::uint64_t{1} << 40)) throw Error(ErrorKind::TooLarge, "idempotent exponent overflow");
  return l;
}

std::vector<Elem> perm_tuple(std::size_t k) {
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

std::string ThickEdge::describe(const std::vector<FiniteAlgebra>& members) const {
  const FiniteAlgebra& m = members.at(member);
  return m.name() + ":" + std::string(to_string(type)) + " " + m.label(a) + m.label(b) + " θ=" + theta;
}

EdgeInventory build_edge_inventory(const std::vector<FiniteAlgebra>& algebras, const Limits& limits) {
  EdgeInventory inv;
  inv.members = make_similar(algebras);
  std::set<std::string> seen;
  for (std::size_t mi = 0; mi < inv.members.size(); ++mi) {
    const FiniteAlgebra& m = inv.members[mi];
    if (m.size() > limits.max_size) throw Error(ErrorKind::TooLarge, m.name() + " exceeds the size limit");
    StructureGraph g = structure_graph(m, limits);
    for (const EdgeReport& r : g.reports) {
      if (r.unknown) {
        throw Error(ErrorKind::CapExceeded, m.name() + ": pair " + m.label(r.a) + m.label(r.b) + " undecided at cap");
      }
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        const EdgeWitness& w = r.witnesses[i];
        if (!w.label) continue;
        if ((*w.label == EdgeType::Semilattice || *w.label == EdgeType::Majority) &&
            !is_subuniverse(m, r.block(i, r.a) | r.block(i, r.b))) {
          throw Error(ErrorKind::NotSmooth, m.name() + ": thick " + std::string(to_string(*w.label)) + " edge " +
                                                m.label(r.a) + m.label(r.b) + " is not a subuniverse");
        }
      }
    }
    for (const EdgeReport& r : g.reports) {
      const Subalgebra sub = restrict(m, r.subalgebra);
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        const EdgeWitness& w = r.witnesses[i];
        if (!w.label) continue;
        if (*w.label == EdgeType::Unary) {
          throw Error(ErrorKind::PreconditionViolated,
                      m.name() + ": unary edge " + m.label(r.a) + m.label(r.b) + " in the class");
        }
        Quotient q = quotient(sub.algebra, w.theta);
        const Elem qa = q.block_map[sub.local(r.a)];
        const Elem qb = q.block_map[sub.local(r.b)];
        std::string key = std::to_string(mi) + "/" + std::to_string(r.subalgebra.bits()) + "/" + w.theta.to_string();
        if (*w.label != EdgeType::Affine) {
          key += "/" + std::to_string(std::min(qa, qb)) + "," + std::to_string(std::max(qa, qb));
        }
        if (!seen.insert(key).second) continue;
        ThickEdge e{mi,
                    r.a,
                    r.b,
                    *w.label,
                    r.subalgebra,
                    theta_text(m, w.theta, sub.embedding),
                    std::move(q.algebra),
                    qa,
                    qb,
                    *w.witness,
                    r.block(i, r.a),
                    r.block(i, r.b)};
        switch (e.type) {
          case EdgeType::Semilattice:
            inv.semilattice.push_back(std::move(e));
            break;
          case EdgeType::Majority:
            inv.majority.push_back(std::move(e));
            break;
          default:
            inv.affine.push_back(std::move(e));
            break;
        }
      }
    }
    inv.graphs.push_back(std::move(g));
  }
  return inv;
}

std::string_view to_string(Equation e) {
  switch (e) {
    case Equation::Absorb:
      return "f(x,f(x,y))=f(x,y)";
    case Equation::FlipAbsorb:
      return "f(f(x,y),f(y,x))=f(x,y)";
    case Equation::MajAbsorb:
      return "m(x,m(x,y,y),m(x,y,y))=m(x,y,y)";
    case Equation::MajCyclic:
      return "m(m(x,y,z),m(y,z,x),m(z,x,y))=m(x,y,z)";
    case Equation::HAbsorb:
      return "h(h(x,y,y),y,y)=h(x,y,y)";
  }
  return "?";
}

Identity equation_identity(Equation e, const Term& op) {
  const bool binary = e == Equation::Absorb || e == Equation::FlipAbsorb;
  if (op.arity() != (binary ? 2U : 3U)) throw Error(ErrorKind::ArityMismatch, std::string(to_string(e)));
  switch (e) {
    case Equation::Absorb:
      return {compose(op, {P(0, 2), op}), op};
    case Equation::FlipAbsorb:
      return {compose(op, {op, swap_binary(op)}), op};
    case Equation::MajAbsorb: {
      const Term x = P(0, 2), y = P(1, 2);
      const Term mxyy = compose(op, {x, y, y});
      return {compose(op, {x, mxyy, mxyy}), mxyy};
    }
    case Equation::MajCyclic:
      return {compose(op, {op, permute(op, {1, 2, 0}), permute(op, {2, 0, 1})}), op};
    case Equation::HAbsorb: {
      const Term x = P(0, 2), y = P(1, 2);
      const Term hxyy = compose(op, {x, y, y});
      return {compose(op, {hxyy, y, y}), hxyy};
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "unknown equation");
}

void IdempotentExponent::add(const std::vector<std::uint32_t>& map) {
  const std::size_t n = map.size();
  std::vector<std::int64_t> seen(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(seen.begin(), seen.end(), -1);
    std::size_t x = start;
    std::int64_t step = 0;
    while (seen[x] < 0) {
      seen[x] = step++;
      x = map[x];
    }
    const auto tail = static_cast<std::uint64_t>(seen[x]);
    const auto cycle = static_cast<std::uint64_t>(step - seen[x]);
    period_ = checked_lcm(period_, cycle);
    tail_ = std::max(tail_, tail);
  }
}

std::uint64_t IdempotentExponent::value() const {
  const std::uint64_t need = std::max<std::uint64_t>(tail_, 1);
  return ((need + period_ - 1) / period_) * period_;
}

Term normalize_identities(const std::vector<FiniteAlgebra>& members, const Term& op, Equation which) {
  const Identity id = equation_identity(which, op);
  if (std::all_of(members.begin(), members.end(),
                  [&](const FiniteAlgebra& m) { return !check_identity(m, id).has_value(); })) {
    return op;
  }
  IdempotentExponent exp;
  for (const FiniteAlgebra& m : members) {
    const OperationTable t = realize_table(op, m);
    const std::size_t n = m.size();
    switch (which) {
      case Equation::Absorb:
      case Equation::MajAbsorb:
        for (Elem x = 0; x < n; ++x) {
          std::vector<std::uint32_t> map(n);
          for (Elem y = 0; y < n; ++y) map[y] = which == Equation::Absorb ? t({x, y}) : t({x, y, y});
          exp.add(map);
        }
        break;
      case Equation::HAbsorb:
        for (Elem y = 0; y < n; ++y) {
          std::vector<std::uint32_t> map(n);
          for (Elem x = 0; x < n; ++x) map[x] = t({x, y, y});
          exp.add(map);
        }
        break;
      case Equation::FlipAbsorb: {
        std::vector<std::uint32_t> map(n * n);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) map[x * n + y] = static_cast<std::uint32_t>(t({x, y}) * n + t({y, x}));
        }
        exp.add(map);
        break;
      }
      case Equation::MajCyclic: {
        std::vector<std::uint32_t> map(n * n * n);
        for (Elem x = 0; x < n; ++x) {
          for (Elem y = 0; y < n; ++y) {
            for (Elem z = 0; z < n; ++z) {
              map[(x * n + y) * n + z] =
                  static_cast<std::uint32_t>((t({x, y, z}) * n + t({y, z, x})) * n + t({z, x, y}));
            }
          }
        }
        exp.add(map);
        break;
      }
    }
  }
  const std::uint64_t n = exp.value();
  Term out;
  switch (which) {
    case Equation::Absorb:
      out = iterate({P(0, 2), op}, {P(0, 2), P(1, 2)}, n, 1);
      break;
    case Equation::FlipAbsorb:
      out = iterate({op, swap_binary(op)}, {P(0, 2), P(1, 2)}, n, 0);
      break;
    case Equation::MajAbsorb:
      out = iterate({P(0, 3), op, op}, {P(0, 3), P(1, 3), P(2, 3)}, n, 1);
      break;
    case Equation::MajCyclic:
      out = iterate({op, permute(op, {1, 2, 0}), permute(op, {2, 0, 1})}, {P(0, 3), P(1, 3), P(2, 3)}, n, 0);
      break;
    case Equation::HAbsorb: {
      const Term inner =
          iterate({compose(op, {P(0, 3), P(1, 3), P(1, 3)}), P(1, 3), P(2, 3)}, {P(0, 3), P(1, 3), P(2, 3)}, n - 1, 0);
      out = compose(op, {inner, P(1, 3), P(2, 3)});
      break;
    }
  }
  const Identity fixed = equation_identity(which, out);
  for (const FiniteAlgebra& m : members) {
    if (auto bad = check_identity(m, fixed)) {
      throw Error(ErrorKind::PostconditionFailed,
                  std::string(to_string(which)) + " fails on " + m.name() + " at " + tuple_text(*bad));
    }
  }
  return out;
}

Term module_projection_fix(const Term& f, const std::vector<const FiniteAlgebra*>& modules) {
  if (f.arity() != 2) throw Error(ErrorKind::ArityMismatch, "binary module fix");
  const auto projected = [&](const Term& t) {
    return std::all_of(modules.begin(), modules.end(), [&](const FiniteAlgebra* d) {
      return first_projection_on(realize_table(t, *d), ElemSet::full(d->size()));
    });
  };
  if (projected(f)) return f;
  IdempotentExponent exp;
  for (const FiniteAlgebra* d : modules) {
    const OperationTable t = realize_table(f, *d);
    for (Elem y = 0; y < d->size(); ++y) {
      std::vector<std::uint32_t> map(d->size());
      for (Elem x = 0; x < d->size(); ++x) map[x] = t({x, y});
      exp.add(map);
    }
  }
  const Term x = P(0, 2), y = P(1, 2);
  const Term f1 = iterate({f, y}, {x, y}, exp.value(), 0);
  const Term f2 = compose(f1, {f1, x});
  if (!projected(f2)) throw Error(ErrorKind::PostconditionFailed, "module fix did not reach the first projection");
  return f2;
}

Term projection_separator(const ThickEdge& c, const std::vector<const FiniteAlgebra*>& modules, const Term& h,
                          const Term& m) {
  const OperationTable ht = realize_table(h, c.quotient);
  std::string pattern;
  for (auto [x, y] : {std::pair{c.qa, c.qb}, std::pair{c.qb, c.qa}}) {
    std::string cur;
    for (Elem v : {ht({x, y, y}), ht({y, x, y}), ht({y, y, x})}) {
      if (v == x) {
        cur += 'x';
      } else if (v == y) {
        cur += 'y';
      } else {
        throw Error(ErrorKind::CaseNotRecognized, "h leaves the pair on " + c.theta);
      }
    }
    if (!pattern.empty() && pattern != cur) {
      throw Error(ErrorKind::CaseNotRecognized, "h is not uniform on the pair " + c.theta);
    }
    pattern = cur;
  }
  const Term x = P(0, 2), y = P(1, 2);
  Term p;
  if (pattern == "xyy" || pattern == "yxy" || pattern == "yyy" || pattern == "xxy") {
    p = compose(h, {x, x, y});
  } else if (pattern == "yyx" || pattern == "yxx") {
    p = compose(h, {y, x, x});
  } else if (pattern == "xyx") {
    p = compose(h, {x, compose(h, {x, y, x}), x});
  } else if (pattern == "xxx") {
    const Term s1 = compose(h, {compose(m, {x, y, y}), y, compose(m, {y, y, x})});
    const Term s2 = compose(m, {x, y, x});
    p = compose(h, {s1, s2, y});
  } else {
    throw Error(ErrorKind::CaseNotRecognized, "pattern " + pattern);
  }
  if (!first_projection_on(realize_table(p, c.quotient), ElemSet{c.qa, c.qb})) {
    throw Error(ErrorKind::PostconditionFailed, "separator is not x on the majority pair (" + pattern + ")");
  }
  const Term swapped = swap_binary(p);
  for (const FiniteAlgebra* d : modules) {
    if (!first_projection_on(realize_table(swapped, *d), ElemSet::full(d->size()))) {
      throw Error(ErrorKind::PostconditionFailed, "separator is not y on a module quotient (" + pattern + ")");
    }
  }
  return p;
}

Term module_projection_fix(const Term& m, const ThickEdge& c, const std::vector<const FiniteAlgebra*>& modules,
                           const Term& h) {
  if (modules.empty()) return m;
  const Term p = projection_separator(c, modules, h, m);
  return compose(p, {m, P(0, 3)});
}

bool UniformOps::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.ok; });
}

std::vector<CheckOutcome> verify_uniform(const EdgeInventory& inv, const DistinguishedOps& ops) {
  std::vector<CheckOutcome> out;
  auto add = [&](std::string cond, std::string where, std::optional<std::vector<Elem>> bad) {
    out.push_back({std::move(cond), std::move(where), !bad.has_value(), bad.value_or(std::vector<Elem>{})});
  };
  auto first_bad = [](const OperationTable& t, ElemSet s, auto&& pred) -> std::optional<std::vector<Elem>> {
    const auto elems = s.elements();
    std::vector<std::size_t> idx(t.arity(), 0);
    std::vector<Elem> args(t.arity());
    while (true) {
      for (std::size_t i = 0; i < args.size(); ++i) args[i] = elems[idx[i]];
      if (!pred(args)) return args;
      std::size_t i = args.size();
      while (i > 0 && ++idx[i - 1] == elems.size()) idx[--i] = 0;
      if (i == 0) return std::nullopt;
    }
  };
  for (const ThickEdge& e : inv.semilattice) {
    const std::string where = e.describe(inv.members);
    const ElemSet pair{e.qa, e.qb};
    const OperationTable w = realize_table(e.witness, e.quotient);
    const OperationTable f = realize_table(ops.f, e.quotient);
    const OperationTable g = realize_table(ops.g, e.quotient);
    const OperationTable h = realize_table(ops.h, e.quotient);
    auto semilattice = [&](const OperationTable& t) {
      return first_bad(t, pair, [&](const std::vector<Elem>& v) {
        return t({v[0], v[1]}) == t({v[1], v[0]}) && pair.contains(t(v));
      });
    };
    add("witness semilattice on pair", where, semilattice(w));
    add("(i) f semilattice", where, semilattice(f));
    add("(ii) g = f(x,f(y,z))", where,
        first_bad(g, pair, [&](const std::vector<Elem>& v) { return g(v) == f({v[0], f({v[1], v[2]})}); }));
    add("(iii) h = f(x,f(y,z))", where,
        first_bad(h, pair, [&](const std::vector<Elem>& v) { return h(v) == f({v[0], f({v[1], v[2]})}); }));
  }
  for (const ThickEdge& e : inv.majority) {
    const std::string where = e.describe(inv.members);
    const ElemSet pair{e.qa, e.qb};
    auto majority = [&](const OperationTable& t) {
      return first_bad(t, pair, [&](const std::vector<Elem>& v) {
        if (v[0] == v[1] || v[0] == v[2]) return t(v) == v[0];
        if (v[1] == v[2]) return t(v) == v[1];
        return true;
      });
    };
    auto first = [&](const OperationTable& t) {
      return first_bad(t, pair, [&](const std::vector<Elem>& v) { return t(v) == v[0]; });
    };
    add("witness majority on pair", where, majority(realize_table(e.witness, e.quotient)));
    add("(i) f first projection", where, first(realize_table(ops.f, e.quotient)));
    add("(ii) g majority", where, majority(realize_table(ops.g, e.quotient)));
    add("(iii) h first projection", where, first(realize_table(ops.h, e.quotient)));
  }
  for (const ThickEdge& e : inv.affine) {
    const std::string where = e.describe(inv.members);
    const ElemSet all = ElemSet::full(e.quotient.size());
    auto maltsev = [&](const OperationTable& t) {
      return first_bad(t, all, [&](const std::vector<Elem>& v) {
        if (v[1] == v[2]) return t(v) == v[0];
        if (v[0] == v[1]) return t(v) == v[2];
        return true;
      });
    };
    auto first = [&](const OperationTable& t) {
      return first_bad(t, all, [&](const std::vector<Elem>& v) { return t(v) == v[0]; });
    };
    add("witness Mal'tsev on quotient", where, maltsev(realize_table(e.witness, e.quotient)));
    add("(i) f first projection", where, first(realize_table(ops.f, e.quotient)));
    add("(ii) g first projection", where, first(realize_table(ops.g, e.quotient)));
    add("(iii) h Mal'tsev", where, maltsev(realize_table(ops.h, e.quotient)));
  }
  for (const FiniteAlgebra& m : inv.members) {
    add(std::string(to_string(Equation::Absorb)), m.name(), check_identity(m, equation_identity(Equation::Absorb, ops.f)));
    add(std::string(to_string(Equation::MajAbsorb)), m.name(),
        check_identity(m, equation_identity(Equation::MajAbsorb, ops.g)));
    add(std::string(to_string(Equation::HAbsorb)), m.name(),
        check_identity(m, equation_identity(Equation::HAbsorb, ops.h)));
    const OperationTable f = realize_table(ops.f, m);
    add("SLS", m.name(), first_bad(f, ElemSet::full(m.size()), [&](const std::vector<Elem>& v) {
          const Elem c = f(v);
          return c == v[0] || (f({v[0], c}) == c && f({c, v[0]}) == c);
        }));
  }
  return out;
}

UniformOps uniform_ops(const std::vector<FiniteAlgebra>& algebras, const Limits& limits) {
  UniformOps u;
  u.inventory = build_edge_inventory(algebras, limits);
  const EdgeInventory& inv = u.inventory;
  std::vector<const FiniteAlgebra*> modules;
  for (const ThickEdge& e : inv.affine) modules.push_back(&e.quotient);

  const Term x2 = P(0, 2), y2 = P(1, 2);
  const Term x = P(0, 3), y = P(1, 3), z = P(2, 3);

  // f: semilattice on every B_i, then the first projection on every module quotient.
  Term f = x2;
  for (std::size_t i = 0; i < inv.semilattice.size(); ++i) {
    const Term& fi = inv.semilattice[i].witness;
    f = i == 0 ? fi : compose(fi, {f, swap_binary(f)});
  }
  if (!modules.empty()) f = module_projection_fix(f, modules);
  f = compose(f, {f, x2});
  f = normalize_identities(inv.members, f, Equation::Absorb);
  const SlsResult sls = synth_sls(inv.members, f);
  f = sls.term;

  // h^l: Mal'tsev on every module quotient.
  Term hl = x;
  for (std::size_t i = 0; i < inv.affine.size(); ++i) {
    const ThickEdge& d = inv.affine[i];
    if (i == 0) {
      hl = d.witness;
      continue;
    }
    if (maltsev_on(realize_table(hl, d.quotient), d.quotient.size())) continue;
    const Term hp = compose(hl, {x2, y2, y2});
    const Term hppp = compose(hl, {y2, y2, x2});
    const Term hi_zyx = compose(d.witness, {z, y, x});
    const Term h1 = compose(hp, {x, hi_zyx});
    const Term h3 = compose(hppp, {x, hi_zyx});
    const Term h2 = compose(h1, {hl, z, x});
    hl = compose(h1, {compose(h2, {h3, y, z}), y, z});
  }

  // g^k: majority on every C_i, first projection on every module quotient.
  Term g = x;
  for (std::size_t i = 0; i < inv.majority.size(); ++i) {
    const ThickEdge& c = inv.majority[i];
    const Term gi = module_projection_fix(c.witness, c, modules, hl);
    if (i == 0) {
      g = gi;
      continue;
    }
    if (majority_on(realize_table(g, c.quotient), c.qa, c.qb)) continue;
    std::optional<Term> p;
    std::vector<Elem> perm = perm_tuple(3);
    do {
      const Term gs = permute(g, {perm[0], perm[1], perm[2]});
      const OperationTable t = realize_table(gs, c.quotient);
      if (t({c.qa, c.qb, c.qb}) == c.qa && t({c.qb, c.qa, c.qa}) == c.qb) {
        p = compose(gs, {x2, y2, y2});
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!p) throw Error(ErrorKind::VerificationFailed, "no permutation makes g(x,y,y)=x on " + c.describe(inv.members));
    g = compose(*p, {gi, g});
  }
  const auto first_on_modules = [&](const Term& t) {
    return std::all_of(modules.begin(), modules.end(), [&](const FiniteAlgebra* d) {
      return first_projection_on(realize_table(t, *d), ElemSet::full(d->size()));
    });
  };
  if (!first_on_modules(g)) {
    std::vector<Elem> perm = perm_tuple(3);
    bool fixed = false;
    do {
      const Term gs = permute(g, {perm[0], perm[1], perm[2]});
      if (first_on_modules(gs)) {
        g = gs;
        fixed = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!fixed) throw Error(ErrorKind::VerificationFailed, "g is not a projection on the module quotients");
  }
  const std::vector<Term> spread = {compose(f, {x, compose(f, {y, z})}), compose(f, {y, compose(f, {z, x})}),
                                    compose(f, {z, compose(f, {x, y})})};
  g = compose(g, spread);
  const Term p = compose(g, {x2, y2, y2});
  const Term hbar = compose(p, {hl, x});
  Term h = compose(hbar, spread);

  g = normalize_identities(inv.members, g, Equation::MajAbsorb);
  h = normalize_identities(inv.members, h, Equation::HAbsorb);

  u.ops = DistinguishedOps{f, g, h, sls.rounds};
  u.checks = verify_uniform(inv, u.ops);
  for (const CheckOutcome& c : u.checks) {
    if (!c.ok) {
      throw Error(ErrorKind::VerificationFailed, c.condition + " on " + c.where + " at " + tuple_text(c.tuple));
    }
  }
  return u;
}

namespace {

const FiniteAlgebra& member_of(const UniformOps& u, const MemberEdge& e) { return u.inventory.members.at(e.member); }

Term need_witness(const FiniteAlgebra& a, Elem x, Elem y, Elem target) {
  if (auto t = binary_witness(a, x, y, target)) return *t;
  throw Error(ErrorKind::WitnessNotFound,
              a.name() + ": " + a.label(target) + " not in Sg{" + a.label(x) + "," + a.label(y) + "}");
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::VerificationFailed, what);
}

void expect_majority_condition(const UniformOps& u, const Term& t, const std::string& name) {
  for (const ThickEdge& c : u.inventory.majority) {
    expect(majority_on(realize_table(t, c.quotient), c.qa, c.qb),
           name + " is not majority on " + c.describe(u.inventory.members));
  }
}

void expect_kind(const MemberEdge& e, ThinKind kind) {
  if (e.kind != kind) {
    throw Error(ErrorKind::PreconditionViolated, "expected a " + std::string(to_string(kind)) + " edge");
  }
}

}  // namespace

Term majority_triple(const UniformOps& u, const MemberEdge& e1, const MemberEdge& e2, const MemberEdge& e3) {
  for (const MemberEdge* e : {&e1, &e2, &e3}) expect_kind(*e, ThinKind::SpecialThinMajority);
  const Term x = P(0, 3), y = P(1, 3), z = P(2, 3);
  const FiniteAlgebra& m1 = member_of(u, e1);
  const FiniteAlgebra& m2 = member_of(u, e2);
  const FiniteAlgebra& m3 = member_of(u, e3);
  const Term& g = u.ops.g;
  const Term t = need_witness(m1, e1.a, eval(g, m1, {e1.a, e1.b, e1.b}), e1.b);
  const Term g1 = compose(g, {compose(t, {x, g}), y, z});
  const Term s = need_witness(m2, e2.a, eval(g1, m2, {e2.b, e2.a, e2.b}), e2.b);
  const Term g2 = compose(g1, {x, compose(s, {y, g1}), z});
  const Term q = need_witness(m3, e3.a, eval(g2, m3, {e3.b, e3.b, e3.a}), e3.b);
  const Term g3 = compose(g2, {x, y, compose(q, {z, g2})});
  expect(eval(g3, m1, {e1.a, e1.b, e1.b}) == e1.b, "g'''(a1,b1,b1) != b1");
  expect(eval(g3, m2, {e2.b, e2.a, e2.b}) == e2.b, "g'''(b2,a2,b2) != b2");
  expect(eval(g3, m3, {e3.b, e3.b, e3.a}) == e3.b, "g'''(b3,b3,a3) != b3");
  expect_majority_condition(u, g3, "g'''");
  return g3;
}

Term affine_pair(const UniformOps& u, const MemberEdge& e1, const MemberEdge& e2) {
  expect_kind(e1, ThinKind::ThinAffine);
  expect_kind(e2, ThinKind::ThinAffine);
  const FiniteAlgebra& m1 = member_of(u, e1);
  const FiniteAlgebra& m2 = member_of(u, e2);
  const Term& h = u.ops.h;
  const Term r = need_witness(m2, e2.a, eval(h, m2, {e2.a, e2.a, e2.b}), e2.b);
  const Term out = compose(r, {P(0, 3), h});
  expect(eval(out, m1, {e1.b, e1.a, e1.a}) == e1.b, "h'(b,a,a) != b");
  expect(eval(out, m2, {e2.a, e2.a, e2.b}) == e2.b, "h'(c,c,d) != d");
  return out;
}

Term mixed_pair(const UniformOps& u, const MemberEdge& e1, const MemberEdge& e2) {
  if (e1.kind == e2.kind) {
    throw Error(ErrorKind::UnsupportedCombination, "both edges are " + std::string(to_string(e1.kind)));
  }
  const FiniteAlgebra& m1 = member_of(u, e1);
  const FiniteAlgebra& m2 = member_of(u, e2);
  const Term& g = u.ops.g;
  const Term& h = u.ops.h;
  const Term x = P(0, 2), y = P(1, 2);
  Term p;
  using K = ThinKind;
  if (e1.kind == K::SpecialThinMajority && e2.kind == K::ThinSemilattice) {
    const Term r = need_witness(m1, e1.a, eval(g, m1, {e1.a, e1.b, e1.b}), e1.b);
    p = compose(r, {y, compose(g, {y, x, x})});
  } else if (e1.kind == K::ThinAffine && e2.kind == K::ThinSemilattice) {
    p = compose(h, {x, y, y});
  } else if (e1.kind == K::ThinAffine && e2.kind == K::SpecialThinMajority) {
    const Term x3 = P(0, 3), y3 = P(1, 3), z3 = P(2, 3);
    const Term r = need_witness(m1, e1.a, eval(h, m1, {e1.a, e1.a, e1.b}), e1.b);
    const Term gp = compose(g, {compose(r, {x3, h}), compose(r, {y3, compose(h, {y3, x3, z3})}), z3});
    const Term s = need_witness(m2, e2.a, eval(gp, m2, {e2.b, e2.b, e2.a}), e2.b);
    p = compose(s, {x, compose(gp, {y, y, x})});
  } else {
    p = swap_binary(mixed_pair(u, e2, e1));
  }
  expect(eval(p, m1, {e1.b, e1.a}) == e1.b, "p(b,a) != b");
  expect(eval(p, m2, {e2.a, e2.b}) == e2.b, "p(c,d) != d");
  return p;
}

Term affine_stable_op(const UniformOps& u, const MemberEdge& e) {
  const FiniteAlgebra& m = member_of(u, e);
  if (e.kind == ThinKind::SpecialThinMajority) {
    const Term x = P(0, 2), y = P(1, 2);
    const Term r = need_witness(m, e.a, eval(u.ops.g, m, {e.a, e.b, e.b}), e.b);
    const Term t = compose(r, {x, compose(u.ops.g, {x, y, y})});
    expect(eval(t, m, {e.a, e.b}) == e.b, "t_ab(a,b) != b");
    for (const ThickEdge& d : u.inventory.affine) {
      expect(first_projection_on(realize_table(t, d.quotient), ElemSet::full(d.quotient.size())),
             "t_ab(c,d) not congruent to c on " + d.describe(u.inventory.members));
    }
    return t;
  }
  if (e.kind == ThinKind::ThinAffine) {
    const Term x = P(0, 3);
    const Term s = need_witness(m, e.a, eval(u.ops.h, m, {e.a, e.a, e.b}), e.b);
    const Term hab = compose(s, {x, u.ops.h});
    expect(eval(hab, m, {e.a, e.a, e.b}) == e.b, "h_ab(a,a,b) != b");
    for (const ThickEdge& d : u.inventory.affine) {
      const OperationTable t = realize_table(hab, d.quotient);
      const std::size_t n = d.quotient.size();
      const std::string where = d.describe(u.inventory.members);
      for (Elem c = 0; c < n; ++c) {
        for (Elem dd = 0; dd < n; ++dd) expect(t({dd, c, c}) == dd, "h_ab(d,c,c) != d on " + where);
      }
      for (Elem c1 = 0; c1 < n; ++c1) {
        for (Elem d1 = 0; d1 < n; ++d1) {
          ElemSet image;
          for (Elem v = 0; v < n; ++v) image.insert(t({v, c1, d1}));
          expect(image.size() == n, "h_ab(x,c',d') is not a permutation on " + where);
        }
      }
    }
    return hab;
  }
  throw Error(ErrorKind::PreconditionViolated, "t_ab and h_ab need a thin majority or thin affine edge");
}

}  // namespace idem
