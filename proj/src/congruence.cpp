#include "idem/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "idem/genclose.hpp"

namespace idem {

namespace {

struct RawOp {
  std::size_t arity;
  const std::vector<Elem>* table;
};

// Principal saturation over raw tables, so that algebras larger than an
// ElemSet (A^2 in the abelianness test) can be handled too.
Congruence saturate(std::size_t n, const std::vector<RawOp>& ops, const std::vector<ElemPair>& pairs) {
  UnionFind uf(n);
  std::vector<ElemPair> queue;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorKind::EntryOutOfRange, "pair element");
    if (uf.unite(x, y)) queue.emplace_back(x, y);
  }
  std::vector<Elem> args;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto [x, y] = queue[qi];
    for (const RawOp& op : ops) {
      const std::size_t r = op.arity;
      const std::size_t fills = checked_pow(n, r - 1);
      args.assign(r, 0);
      for (std::size_t pos = 0; pos < r; ++pos) {
        const std::size_t stride = checked_pow(n, r - 1 - pos);
        for (std::size_t fill = 0; fill < fills; ++fill) {
          // Spread `fill` over the r-1 free slots, leaving `pos` at zero.
          std::size_t high = fill / stride;
          std::size_t low = fill % stride;
          std::size_t base = high * stride * n + low;
          Elem u = (*op.table)[base + x * stride];
          Elem v = (*op.table)[base + y * stride];
          if (uf.unite(u, v)) queue.emplace_back(u, v);
        }
      }
    }
  }
  return uf.to_partition();
}

std::vector<RawOp> raw_ops(const FiniteAlgebra& a) {
  std::vector<RawOp> ops;
  for (const auto& op : a.operations()) ops.push_back({op.arity(), &op.table()});
  return ops;
}

}  // namespace

Congruence cg(const FiniteAlgebra& a, const std::vector<ElemPair>& pairs) {
  return saturate(a.size(), raw_ops(a), pairs);
}

std::optional<CompatibilityViolation> compatibility_violation(const FiniteAlgebra& a, const Congruence& theta) {
  const std::size_t n = a.size();
  if (theta.universe() != n) throw Error(ErrorKind::NotACongruence, "partition universe differs from algebra size");
  const auto leaders = theta.leaders();
  for (const auto& op : a.operations()) {
    const std::size_t r = op.arity();
    for (Elem x = 0; x < n; ++x) {
      const Elem y = leaders[x];
      if (x == y) continue;
      for (std::size_t pos = 0; pos < r; ++pos) {
        std::vector<Elem> t(r, 0);
        const std::size_t fills = checked_pow(n, r - 1);
        for (std::size_t fill = 0; fill < fills; ++fill) {
          std::size_t rest = fill;
          for (std::size_t j = r; j-- > 0;) {
            if (j == pos) continue;
            t[j] = static_cast<Elem>(rest % n);
            rest /= n;
          }
          t[pos] = x;
          Elem u = op(t);
          t[pos] = y;
          Elem v = op(t);
          if (!theta.related(u, v)) {
            t[pos] = x;
            return CompatibilityViolation{op.name(), pos, t, x, y};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_compatible(const FiniteAlgebra& a, const Congruence& theta) {
  return !compatibility_violation(a, theta).has_value();
}

std::vector<Congruence> congruence_lattice(const FiniteAlgebra& a, const Limits& limits) {
  if (a.size() > limits.max_size) {
    throw Error(ErrorKind::TooLarge, "congruence lattice limited to " + std::to_string(limits.max_size) + " elements");
  }
  const std::size_t n = a.size();
  std::set<Congruence> principal;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) principal.insert(cg(a, {{x, y}}));
  }
  std::set<Congruence> all{Congruence::equality(n)};
  std::vector<Congruence> queue{Congruence::equality(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& p : principal) {
      Congruence j = queue[i].join(p);
      if (all.insert(j).second) queue.push_back(j);
    }
  }
  return {all.begin(), all.end()};
}

std::vector<Congruence> maximal_congruences(const FiniteAlgebra& a, const Limits& limits) {
  const auto lattice = congruence_lattice(a, limits);
  std::vector<Congruence> out;
  for (const auto& theta : lattice) {
    if (theta.is_total()) continue;
    bool maximal = std::none_of(lattice.begin(), lattice.end(), [&](const Congruence& eta) {
      return !eta.is_total() && eta != theta && theta.refines(eta);
    });
    if (maximal) out.push_back(theta);
  }
  return out;
}

bool is_simple(const FiniteAlgebra& a, const Limits& limits) {
  return congruence_lattice(a, limits).size() <= 2;
}

Tolerance::Tolerance(std::size_t n) : rows_(n, 0) {
  if (n > ElemSet::kMaxUniverse) throw Error(ErrorKind::TooLarge, "tolerances are limited to 64 elements");
  for (Elem x = 0; x < n; ++x) rows_[x] |= std::uint64_t{1} << x;
}

void Tolerance::relate(Elem x, Elem y) {
  rows_[x] |= std::uint64_t{1} << y;
  rows_[y] |= std::uint64_t{1} << x;
}

bool Tolerance::is_reflexive() const {
  for (Elem x = 0; x < rows_.size(); ++x) {
    if (!related(x, x)) return false;
  }
  return true;
}

bool Tolerance::is_symmetric() const {
  for (Elem x = 0; x < rows_.size(); ++x) {
    for (Elem y = 0; y < rows_.size(); ++y) {
      if (related(x, y) != related(y, x)) return false;
    }
  }
  return true;
}

bool Tolerance::is_equality() const {
  for (Elem x = 0; x < rows_.size(); ++x) {
    if (rows_[x] != (std::uint64_t{1} << x)) return false;
  }
  return true;
}

bool Tolerance::is_total() const {
  const ElemSet full = ElemSet::full(rows_.size());
  return std::all_of(rows_.begin(), rows_.end(), [&](std::uint64_t r) { return r == full.bits(); });
}

std::vector<ElemPair> Tolerance::pairs() const {
  std::vector<ElemPair> out;
  for (Elem x = 0; x < rows_.size(); ++x) {
    for (Elem y = 0; y < rows_.size(); ++y) {
      if (related(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<ElemSet> Tolerance::classes() const {
  // Bron-Kerbosch with pivoting over bit masks.
  std::vector<ElemSet> out;
  auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      out.emplace_back(r);
      return;
    }
    const std::uint64_t px = p | x;
    const Elem pivot = static_cast<Elem>(std::countr_zero(px));
    std::uint64_t candidates = p & ~rows_[pivot];
    if ((p >> pivot) & 1U) candidates |= std::uint64_t{1} << pivot;
    for (; candidates != 0; candidates &= candidates - 1) {
      const Elem v = static_cast<Elem>(std::countr_zero(candidates));
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t nb = rows_[v] & ~bit;
      self(self, r | bit, p & nb, x & nb);
      p &= ~bit;
      x |= bit;
    }
  };
  bk(bk, 0, ElemSet::full(rows_.size()).bits(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

Congruence Tolerance::transitive_closure() const {
  UnionFind uf(rows_.size());
  for (auto [x, y] : pairs()) uf.unite(x, y);
  return uf.to_partition();
}

bool is_compatible(const FiniteAlgebra& a, const Tolerance& t) {
  const auto pairs = t.pairs();
  std::vector<Elem> lhs, rhs;
  for (const auto& op : a.operations()) {
    const std::size_t r = op.arity();
    std::vector<std::size_t> idx(r, 0);
    lhs.resize(r);
    rhs.resize(r);
    while (true) {
      for (std::size_t j = 0; j < r; ++j) {
        lhs[j] = pairs[idx[j]].first;
        rhs[j] = pairs[idx[j]].second;
      }
      if (!t.related(op(lhs), op(rhs))) return false;
      std::size_t pos = r;
      while (pos > 0 && ++idx[pos - 1] == pairs.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return true;
}

ToleranceResult tolerance_ops(const FiniteAlgebra& a, const std::vector<ElemPair>& pairs) {
  const std::size_t n = a.size();
  std::vector<std::vector<Elem>> generators;
  for (Elem x = 0; x < n; ++x) generators.push_back({x, x});
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorKind::EntryOutOfRange, "pair element");
    generators.push_back({x, y});
    generators.push_back({y, x});
  }
  TupleClosure closure(a, 2, generators, n * n + 1);
  closure.run();
  Tolerance tol(n);
  for (std::size_t i = 0; i < closure.size(); ++i) {
    auto t = closure.tuple(i);
    tol.relate(t[0], t[1]);
  }
  return {tol, tol.classes()};
}

Tolerance link_tolerance(const FiniteAlgebra& a, const std::vector<std::vector<Elem>>& relation, std::size_t i) {
  const std::size_t n = a.size();
  if (relation.empty()) throw Error(ErrorKind::ProjectionNotFull, "empty relation");
  const std::size_t k = relation.front().size();
  if (i >= k) throw Error(ErrorKind::PreconditionViolated, "coordinate " + std::to_string(i) + " out of range");
  for (std::size_t j = 0; j < k; ++j) {
    ElemSet seen;
    for (const auto& t : relation) seen.insert(t[j]);
    if (seen != ElemSet::full(n)) throw Error(ErrorKind::ProjectionNotFull, "coordinate " + std::to_string(j));
  }
  std::map<std::vector<Elem>, ElemSet> fibres;
  for (const auto& t : relation) {
    std::vector<Elem> rest = t;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    fibres[rest].insert(t[i]);
  }
  Tolerance tol(n);
  for (const auto& [rest, values] : fibres) {
    for (Elem x : values.elements()) {
      for (Elem y : values.elements()) tol.relate(x, y);
    }
  }
  if (!tol.is_reflexive() || !tol.is_symmetric() || !is_compatible(a, tol)) {
    throw Error(ErrorKind::PostconditionFailed, "link tolerance is not a tolerance (relation not compatible?)");
  }
  return tol;
}

bool is_abelian(const FiniteAlgebra& a, const Limits& limits) {
  const std::size_t n = a.size();
  if (n > limits.max_size) throw Error(ErrorKind::TooLarge, "abelianness test limited to " + std::to_string(limits.max_size) + " elements");
  if (n == 1) return true;
  const std::size_t n2 = n * n;
  std::vector<std::vector<Elem>> tables;
  for (const auto& op : a.operations()) {
    const std::size_t r = op.arity();
    std::vector<Elem> table(checked_pow(n2, r));
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::size_t left = 0, right = 0, rest = i;
      std::size_t mult = 1;
      for (std::size_t j = 0; j < r; ++j) {
        const std::size_t e = rest % n2;
        rest /= n2;
        left += (e / n) * mult;
        right += (e % n) * mult;
        mult *= n;
      }
      table[i] = static_cast<Elem>(op.at(left) * n + op.at(right));
    }
    tables.push_back(std::move(table));
  }
  std::vector<RawOp> ops;
  for (std::size_t j = 0; j < tables.size(); ++j) ops.push_back({a.operation(j).arity(), &tables[j]});
  std::vector<ElemPair> pairs;
  for (Elem x = 1; x < n; ++x) pairs.emplace_back(0, static_cast<Elem>(x * n + x));
  const Congruence theta = saturate(n2, ops, pairs);
  const std::size_t block = theta.block_of(0);
  for (Elem e = 0; e < n2; ++e) {
    const bool diagonal = e / n == e % n;
    if ((theta.block_of(e) == block) != diagonal) return false;
  }
  return true;
}

std::string_view to_string(SimpleKind kind) {
  switch (kind) {
    case SimpleKind::Set:
      return "set";
    case SimpleKind::Module:
      return "module";
    case SimpleKind::Other:
      return "other";
  }
  return "?";
}

SimpleKind classify_simple_quotient(const FiniteAlgebra& d) {
  if (is_set(d)) return SimpleKind::Set;
  Limits limits;
  limits.max_size = std::max(limits.max_size, d.size());
  return is_abelian(d, limits) ? SimpleKind::Module : SimpleKind::Other;
}

AbsorbingReport absorbing_elements(const FiniteAlgebra& a, std::size_t max_arity, const Limits& limits) {
  const std::size_t n = a.size();
  if (n > limits.max_size) throw Error(ErrorKind::TooLarge, "absorption check limited to " + std::to_string(limits.max_size) + " elements");
  AbsorbingReport report;
  report.elements = ElemSet::full(n);
  for (std::size_t j = 1; j <= max_arity; ++j) {
    if (report.elements.empty()) {
      report.arity = max_arity;
      break;
    }
    const std::size_t k = checked_pow(n, j);
    std::vector<std::vector<Elem>> generators(j, std::vector<Elem>(k));
    for (std::size_t c = 0; c < k; ++c) {
      const auto t = tuple_at(c, j, n);
      for (std::size_t v = 0; v < j; ++v) generators[v][c] = t[v];
    }
    // Keep the arena under ~256 MiB.
    const std::size_t cap = std::max<std::size_t>(1, std::min(limits.node_cap, (std::size_t{1} << 28) / k));
    TupleClosure closure(a, k, generators, cap);
    if (closure.run() != TupleClosure::Status::Complete) {
      report.complete = false;
      break;
    }
    report.arity = j;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const auto table = closure.tuple(i);
      for (std::size_t v = 0; v < j; ++v) {
        const std::size_t stride = checked_pow(n, j - 1 - v);
        bool depends = false;
        for (std::size_t c = 0; c < k && !depends; ++c) {
          const std::size_t digit = (c / stride) % n;
          const std::size_t base = c - digit * stride;
          for (std::size_t e = 0; e < n; ++e) {
            if (table[base + e * stride] != table[base]) {
              depends = true;
              break;
            }
          }
        }
        if (!depends) continue;
        for (Elem x : report.elements.elements()) {
          for (std::size_t c = 0; c < k; ++c) {
            if ((c / stride) % n == x && table[c] != x) {
              report.elements.erase(x);
              break;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace idem
