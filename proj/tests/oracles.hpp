#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond FiniteAlgebra itself.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "idem/algebra.hpp"

namespace oracle {

using idem::Elem;
using idem::FiniteAlgebra;
using Tuple = std::vector<Elem>;

/// Round-based closure: S <- S ∪ {f(s1..sr)} over all of S^r until nothing
/// changes. nullopt when the closure grows past `bound`.
inline std::optional<std::set<Tuple>> naive_closure(const FiniteAlgebra& a, const std::vector<Tuple>& gens,
                                                    std::size_t bound) {
  std::set<Tuple> s(gens.begin(), gens.end());
  if (gens.empty()) return s;
  const std::size_t k = gens.front().size();
  while (true) {
    const std::vector<Tuple> cur(s.begin(), s.end());
    std::set<Tuple> next = s;
    for (const auto& op : a.operations()) {
      const std::size_t r = op.arity();
      std::vector<std::size_t> idx(r, 0);
      std::vector<Elem> args(r);
      while (true) {
        Tuple t(k);
        for (std::size_t c = 0; c < k; ++c) {
          for (std::size_t j = 0; j < r; ++j) args[j] = cur[idx[j]][c];
          t[c] = op(args);
        }
        next.insert(std::move(t));
        if (next.size() > bound) return std::nullopt;
        std::size_t j = r;
        while (j > 0 && ++idx[j - 1] == cur.size()) idx[--j] = 0;
        if (j == 0) break;
      }
    }
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

/// Term condition restricted to terms of arity at most 3: for all u, v and
/// tuples ā, b̄ of length 1 or 2, no term t has t(u,ā)=t(u,b̄) but
/// t(v,ā)≠t(v,b̄). The set {(t(u,ā), t(u,b̄), t(v,ā), t(v,b̄))} over all terms is
/// the subalgebra of A^4 generated by the variable columns.
inline bool term_condition_arity3(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m <= 2; ++m) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < 2 * m; ++j) count *= n;
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        for (std::size_t code = 0; code < count; ++code) {
          std::vector<Elem> ab(2 * m);
          std::size_t c = code;
          for (std::size_t j = 0; j < 2 * m; ++j) {
            ab[j] = static_cast<Elem>(c % n);
            c /= n;
          }
          std::vector<Tuple> gens{{u, u, v, v}};
          for (std::size_t j = 0; j < m; ++j) gens.push_back({ab[j], ab[m + j], ab[j], ab[m + j]});
          const auto r = naive_closure(a, gens, 1u << 20);
          for (const Tuple& t : *r) {
            if (t[0] == t[1] && t[2] != t[3]) return false;
          }
        }
      }
    }
  }
  return true;
}

/// All partitions of 0..n-1 compatible with every operation, by brute force.
inline std::vector<std::vector<std::size_t>> brute_congruences(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(n, 0);
  // Restricted growth strings enumerate every partition once.
  auto compatible = [&] {
    for (const auto& op : a.operations()) {
      const std::size_t r = op.arity();
      std::size_t total = 1;
      for (std::size_t j = 0; j < r; ++j) total *= n;
      for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
          auto x = idem::tuple_at(i, r, n), y = idem::tuple_at(j, r, n);
          bool related = true;
          for (std::size_t q = 0; q < r && related; ++q) related = label[x[q]] == label[y[q]];
          if (related && label[op.at(i)] != label[op.at(j)]) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t max) -> void {
    if (i == n) {
      if (compatible()) out.push_back(label);
      return;
    }
    for (std::size_t b = 0; b <= max + 1; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(max, b));
    }
  };
  if (n == 0) return out;
  label[0] = 0;
  rec(rec, 1, 0);
  return out;
}

/// Seeded random idempotent algebra of the given size. `flavor` 0: random
/// tables; 1: affine combinations over Z_n (abelian); 2: projections (a set).
inline FiniteAlgebra random_algebra(std::mt19937_64& rng, std::size_t n, int flavor) {
  std::vector<idem::OperationTable> ops;
  const std::size_t count = 1 + rng() % 2;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = 2 + rng() % 2;
    std::size_t total = 1;
    for (std::size_t j = 0; j < r; ++j) total *= n;
    std::vector<Elem> table(total);
    std::vector<std::size_t> coeff(r, 0);
    if (flavor == 1) {
      // Coefficients summing to 1 mod n.
      std::size_t sum = 0;
      for (std::size_t j = 0; j + 1 < r; ++j) {
        coeff[j] = rng() % n;
        sum += coeff[j];
      }
      coeff[r - 1] = (n + 1 - sum % n) % n;
    }
    const std::size_t proj = rng() % r;
    for (std::size_t t = 0; t < total; ++t) {
      const auto args = idem::tuple_at(t, r, n);
      bool diagonal = true;
      for (Elem x : args) diagonal = diagonal && x == args[0];
      if (diagonal) {
        table[t] = args[0];
      } else if (flavor == 1) {
        std::size_t v = 0;
        for (std::size_t j = 0; j < r; ++j) v += coeff[j] * args[j];
        table[t] = static_cast<Elem>(v % n);
      } else if (flavor == 2) {
        table[t] = args[proj];
      } else {
        table[t] = static_cast<Elem>(rng() % n);
      }
    }
    ops.emplace_back("o" + std::to_string(i), r, n, std::move(table));
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  return FiniteAlgebra("random", n, labels, std::move(ops));
}

}  // namespace oracle
