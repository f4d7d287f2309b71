#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idem/elemset.hpp"
#include "idem/error.hpp"
#include "idem/partition.hpp"

namespace idem {

/// Resource bounds shared by every exhaustive procedure.
struct Limits {
  /// Largest universe accepted for full analysis.
  std::size_t max_size = 10;
  /// Node cap for tuple closures (subpower membership, free algebras).
  std::size_t node_cap = 1'000'000;
};

/// n^k, throwing TooLarge when it does not fit comfortably in memory indices.
std::size_t checked_pow(std::size_t n, std::size_t k);

/// Row-major radix-n index of a tuple: the first coordinate is most significant.
std::size_t tuple_index(std::span<const Elem> tuple, std::size_t n);
std::vector<Elem> tuple_at(std::size_t index, std::size_t arity, std::size_t n);

class OperationTable {
 public:
  /// Checks length and entry range; idempotency is checked by FiniteAlgebra.
  OperationTable(std::string name, std::size_t arity, std::size_t universe, std::vector<Elem> table);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  std::size_t universe() const { return universe_; }
  const std::vector<Elem>& table() const { return table_; }

  Elem operator()(std::span<const Elem> args) const { return table_[tuple_index(args, universe_)]; }
  Elem operator()(std::initializer_list<Elem> args) const {
    return (*this)(std::span<const Elem>(args.begin(), args.size()));
  }
  Elem at(std::size_t index) const { return table_[index]; }

  /// Index i such that the operation is the i-th projection, if any.
  std::optional<std::size_t> projection_index() const;

  OperationTable renamed(std::string name) const;

  bool operator==(const OperationTable&) const = default;

 private:
  std::string name_;
  std::size_t arity_;
  std::size_t universe_;
  std::vector<Elem> table_;
};

/// Unvalidated algebra as read from a file or written by hand.
struct AlgebraDescription {
  struct Operation {
    std::string name;
    std::size_t arity = 0;
    std::vector<Elem> table;
    bool operator==(const Operation&) const = default;
  };
  std::string name;
  std::size_t size = 0;
  std::vector<std::string> labels;
  std::vector<Operation> operations;
  bool operator==(const AlgebraDescription&) const = default;
};

/// A finite idempotent algebra on 0..n-1. Immutable after construction; the
/// constructor enforces every invariant (idempotency, unique names, tables).
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::size_t size, std::vector<std::string> labels,
                std::vector<OperationTable> operations);

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem x) const;
  const std::vector<OperationTable>& operations() const { return operations_; }
  const OperationTable& operation(std::size_t i) const { return operations_[i]; }
  /// nullptr when no operation has this name.
  const OperationTable* find(const std::string& name) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  FiniteAlgebra renamed(std::string name) const;
  AlgebraDescription describe() const;

 private:
  std::string name_;
  std::size_t size_;
  std::vector<std::string> labels_;
  std::vector<OperationTable> operations_;
};

/// Validates a raw description; rejects universes above `limits.max_size`
/// unless `force` is set.
FiniteAlgebra validate_algebra(const AlgebraDescription& description, const Limits& limits = {},
                               bool force = false);

/// Name- and arity-preserving bijection between the operations of two algebras.
class SignatureMap {
 public:
  /// Throws SignatureMismatch unless both algebras have the same symbols with equal arities.
  static SignatureMap match(const FiniteAlgebra& a, const FiniteAlgebra& b);
  /// Index in the second algebra of the first algebra's i-th operation.
  std::size_t operator[](std::size_t i) const { return to_second_[i]; }

 private:
  std::vector<std::size_t> to_second_;
};

/// Coordinatewise product; the pair (x, y) is encoded as x * |B| + y.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b, const SignatureMap& sig);
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);
/// Element of a product built by `product`.
inline Elem pair_element(Elem x, Elem y, std::size_t right_size) {
  return static_cast<Elem>(x * right_size + y);
}

struct Quotient {
  FiniteAlgebra algebra;
  std::vector<Elem> block_map;  // element -> block index
};

/// Factor algebra; throws NotACongruence (with the violating tuples) when
/// the partition is not compatible.
Quotient quotient(const FiniteAlgebra& a, const Congruence& theta);

struct Subalgebra {
  FiniteAlgebra algebra;
  std::vector<Elem> embedding;  // local element -> parent element, increasing
  /// Local index of a parent element; the element must belong to the subuniverse.
  Elem local(Elem parent) const;
  ElemSet universe() const { return ElemSet::from(embedding); }
};

/// Restriction to a subuniverse; throws NotClosed with the escaping value.
Subalgebra restrict(const FiniteAlgebra& a, ElemSet subset);

/// True iff every basic operation is a projection.
bool is_set(const FiniteAlgebra& a);

/// Brings a list of algebras to a common signature: symbols missing from a
/// member are added as first projections of the right arity. Symbols are
/// ordered by first appearance. Throws SignatureMismatch on arity clashes.
std::vector<FiniteAlgebra> make_similar(const std::vector<FiniteAlgebra>& algebras);

/// Backtracking search for an isomorphism (operations matched by name),
/// for universes of at most 8 elements.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace idem
