#include "idem/reduct.hpp"

#include <algorithm>

#include "idem/genclose.hpp"

namespace idem {

namespace {

bool preserves(const std::vector<Elem>& table, std::size_t arity, std::size_t n, ElemSet rel) {
  const auto elems = rel.elements();
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Elem> args(arity);
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) args[i] = elems[idx[i]];
    if (!rel.contains(table[tuple_index(args, n)])) return false;
    std::size_t i = arity;
    while (i > 0 && ++idx[i - 1] == elems.size()) idx[--i] = 0;
    if (i == 0) return true;
  }
}

}  // namespace

BoundedReduct bounded_reduct(const FiniteAlgebra& a, const EdgeReport& report, std::size_t witness,
                             std::size_t max_arity, std::size_t cap, std::uint64_t work_cap) {
  const auto label = report.witnesses.at(witness).label;
  if (label != EdgeType::Semilattice && label != EdgeType::Majority) {
    throw Error(ErrorKind::PreconditionViolated, "reduct needs a semilattice or majority witness");
  }
  if (max_arity == 0) throw Error(ErrorKind::PreconditionViolated, "arity bound must be positive");
  if (max_arity >= 3 && a.size() > 4) {
    throw Error(ErrorKind::TooLarge, "arity-3 reducts are limited to 4 elements");
  }
  const std::size_t n = a.size();
  const ElemSet rel = report.block(witness, report.a) | report.block(witness, report.b);
  std::vector<OperationTable> ops;
  std::vector<Term> terms;
  std::vector<std::size_t> clone_sizes;
  for (std::size_t k = 1; k <= max_arity; ++k) {
    const std::size_t coords = checked_pow(n, k);
    std::vector<std::vector<Elem>> gens(k, std::vector<Elem>(coords));
    for (std::size_t c = 0; c < coords; ++c) {
      const auto t = tuple_at(c, k, n);
      for (std::size_t j = 0; j < k; ++j) gens[j][c] = t[j];
    }
    TupleClosure closure(a, coords, gens, cap);
    closure.set_work_cap(work_cap);
    if (closure.run() == TupleClosure::Status::CapExceeded) {
      throw Error(ErrorKind::CapExceeded,
                  "arity-" + std::to_string(k) + " clone closure stopped at " + std::to_string(closure.size()) +
                      " operations after " + std::to_string(closure.work()) + " applications");
    }
    clone_sizes.push_back(closure.size());
    for (std::size_t i = 0; i < closure.size(); ++i) {
      std::vector<Elem> table = closure.tuple(i);
      if (!preserves(table, k, n, rel)) continue;
      ops.emplace_back("r" + std::to_string(k) + "_" + std::to_string(i), k, n, std::move(table));
      terms.push_back(closure.witness(i));
    }
  }
  FiniteAlgebra reduct(a.name() + "'", n, a.labels(), std::move(ops));
  return BoundedReduct{a, report.a, report.b, rel, max_arity, std::move(reduct), std::move(terms),
                       std::move(clone_sizes)};
}

ReductDiff reduct_edge_report(const BoundedReduct& r, const Limits& limits) {
  Limits lim = limits;
  lim.max_size = std::max(lim.max_size, r.base.size());
  const StructureGraph before = structure_graph(r.base, lim);
  const StructureGraph after = structure_graph(r.algebra, lim);
  ReductDiff diff;
  diff.max_arity = r.max_arity;
  for (std::size_t i = 0; i < before.reports.size(); ++i) {
    ReductPairDiff p{before.reports[i].a, before.reports[i].b, before.reports[i].types(), after.reports[i].types()};
    auto has = [](const std::vector<EdgeType>& v, EdgeType t) { return std::find(v.begin(), v.end(), t) != v.end(); };
    diff.new_unary = diff.new_unary || (has(p.reduct_types, EdgeType::Unary) && !has(p.base_types, EdgeType::Unary));
    diff.new_affine =
        diff.new_affine || (has(p.reduct_types, EdgeType::Affine) && !has(p.base_types, EdgeType::Affine));
    diff.identical = diff.identical && p.base_types == p.reduct_types;
    diff.pairs.push_back(std::move(p));
  }
  return diff;
}

}  // namespace idem
