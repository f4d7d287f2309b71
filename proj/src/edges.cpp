#include "idem/edges.hpp"

#include <algorithm>

#include "idem/genclose.hpp"

namespace idem {

std::string_view to_string(EdgeType type) {
  switch (type) {
    case EdgeType::Unary:
      return "unary";
    case EdgeType::Semilattice:
      return "semilattice";
    case EdgeType::Majority:
      return "majority";
    case EdgeType::Affine:
      return "affine";
  }
  return "?";
}

std::vector<EdgeType> EdgeReport::types() const {
  std::vector<EdgeType> out;
  for (const auto& w : witnesses) {
    if (w.label && std::find(out.begin(), out.end(), *w.label) == out.end()) out.push_back(*w.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool EdgeReport::has_type(EdgeType t) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const EdgeWitness& w) { return w.label == t; });
}

ElemSet EdgeReport::block(std::size_t i, Elem x) const {
  auto it = std::lower_bound(embedding.begin(), embedding.end(), x);
  if (it == embedding.end() || *it != x) {
    throw Error(ErrorKind::PreconditionViolated, "element " + std::to_string(x) + " outside Sg{a,b}");
  }
  const Congruence& theta = witnesses.at(i).theta;
  ElemSet out;
  for (Elem l : theta.block(static_cast<Elem>(it - embedding.begin())).elements()) out.insert(embedding[l]);
  return out;
}

EdgeReport classify_pair(const FiniteAlgebra& a, Elem x, Elem y, std::size_t cap) {
  if (x == y) throw Error(ErrorKind::PreconditionViolated, "a pair needs two distinct elements");
  if (x >= a.size() || y >= a.size()) throw Error(ErrorKind::EntryOutOfRange, "pair element");
  EdgeReport report;
  report.a = x;
  report.b = y;
  report.subalgebra = sg(a, ElemSet{x, y});
  const Subalgebra sub = restrict(a, report.subalgebra);
  report.embedding = sub.embedding;
  const FiniteAlgebra& b = sub.algebra;
  Limits limits;
  limits.max_size = std::max(limits.max_size, b.size());
  for (const Congruence& theta : maximal_congruences(b, limits)) {
    EdgeWitness w;
    w.theta = theta;
    const Quotient q = quotient(b, theta);
    const FiniteAlgebra& d = q.algebra;
    const Elem qa = q.block_map[sub.local(x)];
    const Elem qb = q.block_map[sub.local(y)];
    w.quotient_size = d.size();
    w.quotient_kind = classify_simple_quotient(d);
    auto label = [&](EdgeType t, const PairWitness& pw) {
      w.outcome = EdgeWitness::Outcome::Labeled;
      w.label = t;
      w.witness = pw.witness;
    };
    if (w.quotient_kind == SimpleKind::Set) {
      w.outcome = EdgeWitness::Outcome::Labeled;
      w.label = EdgeType::Unary;
    } else {
      const PairWitness s = find_pair_witness(d, WitnessKind::Semilattice, qa, qb, cap);
      if (s.status == SubpowerAnswer::Status::Found) {
        label(EdgeType::Semilattice, s);
        w.absorber = *s.absorber == qa ? x : y;
      } else if (s.status == SubpowerAnswer::Status::CapExceeded) {
        w.outcome = EdgeWitness::Outcome::Inconclusive;
      } else {
        const PairWitness m = find_pair_witness(d, WitnessKind::Majority, qa, qb, cap);
        if (m.status == SubpowerAnswer::Status::Found) {
          label(EdgeType::Majority, m);
        } else if (m.status == SubpowerAnswer::Status::CapExceeded) {
          w.outcome = EdgeWitness::Outcome::Inconclusive;
        } else if (w.quotient_kind == SimpleKind::Module) {
          const PairWitness h = find_pair_witness(d, WitnessKind::Maltsev, qa, qb, cap);
          if (h.status == SubpowerAnswer::Status::Found) {
            label(EdgeType::Affine, h);
          } else if (h.status == SubpowerAnswer::Status::CapExceeded) {
            w.outcome = EdgeWitness::Outcome::Inconclusive;
          } else {
            throw Error(ErrorKind::PostconditionFailed, "abelian simple quotient without a Mal'tsev term");
          }
        }
      }
    }
    report.witnesses.push_back(std::move(w));
  }
  report.is_edge = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                               [](const EdgeWitness& w) { return w.label.has_value(); });
  report.unknown = !report.is_edge && std::any_of(report.witnesses.begin(), report.witnesses.end(), [](const EdgeWitness& w) {
                     return w.outcome == EdgeWitness::Outcome::Inconclusive;
                   });
  return report;
}

StructureGraph structure_graph(const FiniteAlgebra& a, const Limits& limits) {
  if (a.size() > limits.max_size) {
    throw Error(ErrorKind::TooLarge, "edge sweep limited to " + std::to_string(limits.max_size) + " elements");
  }
  StructureGraph g;
  g.size = a.size();
  for (Elem x = 0; x < a.size(); ++x) g.labels.push_back(a.label(x));
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = x + 1; y < a.size(); ++y) {
      EdgeReport r = classify_pair(a, x, y, limits.node_cap);
      for (EdgeType t : r.types()) g.edges.push_back({x, y, t});
      g.reports.push_back(std::move(r));
    }
  }
  return g;
}

StructureGraph hypergraph(const FiniteAlgebra& a, const Limits& limits) {
  StructureGraph g;
  g.size = a.size();
  for (Elem x = 0; x < a.size(); ++x) g.labels.push_back(a.label(x));
  for (ElemSet s : all_subalgebras(a, limits)) {
    if (s != ElemSet::full(a.size())) g.hyperedges.push_back(s);
  }
  return g;
}

Congruence connected_components(const StructureGraph& g, const std::set<EdgeType>& allowed) {
  UnionFind uf(g.size);
  for (const auto& e : g.edges) {
    if (allowed.count(e.type) != 0) uf.unite(e.a, e.b);
  }
  for (ElemSet h : g.hyperedges) {
    const auto elems = h.elements();
    for (Elem e : elems) uf.unite(elems.front(), e);
  }
  return uf.to_partition();
}

Congruence connected_components(const StructureGraph& g) {
  return connected_components(g, {EdgeType::Unary, EdgeType::Semilattice, EdgeType::Majority, EdgeType::Affine});
}

bool is_connected(const StructureGraph& g) { return connected_components(g).is_total(); }

std::optional<ConnectivityCounterexample> x_connected(const FiniteAlgebra& a, const std::set<EdgeType>& allowed,
                                                      const Limits& limits) {
  for (ElemSet s : all_subalgebras(a, limits)) {
    if (s.size() < 2) continue;
    const Subalgebra sub = restrict(a, s);
    const StructureGraph g = structure_graph(sub.algebra, limits);
    const Congruence comp = connected_components(g, allowed);
    if (comp.is_total()) continue;
    for (Elem x = 0; x < sub.algebra.size(); ++x) {
      for (Elem y = x + 1; y < sub.algebra.size(); ++y) {
        if (!comp.related(x, y)) return ConnectivityCounterexample{s, sub.embedding[x], sub.embedding[y]};
      }
    }
  }
  return std::nullopt;
}

std::optional<SmoothnessCounterexample> smoothness_violation(const FiniteAlgebra& a, const Limits& limits) {
  const StructureGraph g = structure_graph(a, limits);
  for (const auto& r : g.reports) {
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      const auto& w = r.witnesses[i];
      if (w.label != EdgeType::Semilattice && w.label != EdgeType::Majority) continue;
      const ElemSet blocks = r.block(i, r.a) | r.block(i, r.b);
      if (!is_subuniverse(a, blocks)) {
        return SmoothnessCounterexample{r.a, r.b, *w.label, w.theta.to_string(), blocks};
      }
    }
  }
  return std::nullopt;
}

bool is_smooth(const FiniteAlgebra& a, const Limits& limits) { return !smoothness_violation(a, limits).has_value(); }

}  // namespace idem
