#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idem/algebra.hpp"

namespace idem {

using ElemPair = std::pair<Elem, Elem>;

/// Least congruence containing the pairs (union-find saturated under all
/// basic translations x -> f(c1, ..., x, ..., cr)).
Congruence cg(const FiniteAlgebra& a, const std::vector<ElemPair>& pairs);

/// A translation that separates a related pair, if the partition is not compatible.
struct CompatibilityViolation {
  std::string op;
  std::size_t position = 0;
  std::vector<Elem> constants;  // full argument tuple with the slot holding x
  Elem x = 0;
  Elem y = 0;
};
std::optional<CompatibilityViolation> compatibility_violation(const FiniteAlgebra& a, const Congruence& theta);
bool is_compatible(const FiniteAlgebra& a, const Congruence& theta);

/// All congruences, sorted canonically by block-leader sequence (total first).
std::vector<Congruence> congruence_lattice(const FiniteAlgebra& a, const Limits& limits = {});
/// Congruences with a simple quotient (maximal proper), canonically sorted.
/// The one-element algebra has none.
std::vector<Congruence> maximal_congruences(const FiniteAlgebra& a, const Limits& limits = {});
bool is_simple(const FiniteAlgebra& a, const Limits& limits = {});

/// Reflexive symmetric relation on 0..n-1 as a bit matrix.
class Tolerance {
 public:
  explicit Tolerance(std::size_t n);
  std::size_t universe() const { return rows_.size(); }
  bool related(Elem x, Elem y) const { return (rows_[x] >> y) & 1U; }
  void relate(Elem x, Elem y);
  ElemSet neighbours(Elem x) const { return ElemSet(rows_[x]); }
  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_equality() const;
  bool is_total() const;
  std::vector<ElemPair> pairs() const;
  /// Maximal cliques, sorted by (size, elements).
  std::vector<ElemSet> classes() const;
  /// Equivalence generated by the relation.
  Congruence transitive_closure() const;
  bool operator==(const Tolerance&) const = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// True iff every basic operation preserves the relation.
bool is_compatible(const FiniteAlgebra& a, const Tolerance& t);

struct ToleranceResult {
  Tolerance tolerance;
  std::vector<ElemSet> classes;
};

/// Least tolerance containing the pairs, with its classes.
ToleranceResult tolerance_ops(const FiniteAlgebra& a, const std::vector<ElemPair>& pairs);

/// i-th link tolerance of a relation R (a subuniverse of A^k with full
/// projections): a ~ b iff some tuples of R agree off coordinate i and carry
/// a and b there. Throws ProjectionNotFull(j) or PostconditionFailed.
Tolerance link_tolerance(const FiniteAlgebra& a, const std::vector<std::vector<Elem>>& relation, std::size_t i);

/// Diagonal-block test: the diagonal of A^2 is a block of the congruence
/// of A^2 generated by all pairs of diagonal elements.
bool is_abelian(const FiniteAlgebra& a, const Limits& limits = {});

enum class SimpleKind { Set, Module, Other };
std::string_view to_string(SimpleKind kind);
SimpleKind classify_simple_quotient(const FiniteAlgebra& d);

struct AbsorbingReport {
  ElemSet elements;
  /// Largest term arity examined.
  std::size_t arity = 0;
  /// False when the term enumeration hit the node cap; `elements` is then
  /// only known to pass the arities that completed.
  bool complete = true;
};

/// Elements absorbing for every term operation of arity at most `max_arity`
/// (in every variable the operation depends on).
AbsorbingReport absorbing_elements(const FiniteAlgebra& a, std::size_t max_arity = 3, const Limits& limits = {});

}  // namespace idem
