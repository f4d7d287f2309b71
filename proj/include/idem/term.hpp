#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idem/algebra.hpp"

namespace idem {

enum class TermKind { Projection, Apply, Iterate };

struct TermNode;

/// Handle to a hash-consed term node. Structurally equal terms share one node,
/// so equality is pointer equality. Nodes live for the whole process.
class Term {
 public:
  Term() = default;

  TermKind kind() const;
  /// Number of variables.
  std::size_t arity() const;
  /// Projection index, or the output component of an Iterate node.
  std::size_t index() const;
  /// Operation symbol of an Apply node.
  const std::string& op() const;
  /// Arguments of an Apply node.
  std::span<const Term> children() const;
  /// Iterate node: S = (steps[0], ..., steps[k-1]) is applied `times()` times
  /// to (inputs[0](x), ..., inputs[k-1](x)); the value is component index().
  std::span<const Term> steps() const;
  std::span<const Term> inputs() const;
  std::uint64_t times() const;

  bool valid() const { return node_ != nullptr; }
  const TermNode* node() const { return node_; }
  bool operator==(const Term& other) const { return node_ == other.node_; }

  /// Number of distinct nodes reachable from this one.
  std::size_t dag_size() const;
  /// Prefix text form, e.g. `f(p0, g(p1, p0, p1))`.
  std::string to_string() const;

 private:
  friend Term make_node(TermNode&& node);
  explicit Term(const TermNode* node) : node_(node) {}
  const TermNode* node_ = nullptr;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return std::hash<const TermNode*>{}(t.node()); }
};

Term proj(std::size_t index, std::size_t arity);
/// All children must have the same arity, which becomes the arity of the result.
Term apply(const std::string& op, std::vector<Term> children);
/// steps: k terms of arity k; inputs: k terms of a common arity j.
Term iterate(std::vector<Term> steps, std::vector<Term> inputs, std::uint64_t times, std::size_t index);

/// t(args[0], ..., args[m-1]) where m = t.arity(); all args share one arity.
Term compose(const Term& t, const std::vector<Term>& args);
/// t(x1, x0) for binary t; general variable permutation below.
Term swap_binary(const Term& t);
/// Variables of t renamed: result(x) = t(x[perm[0]], ..., x[perm[m-1]]).
Term permute(const Term& t, const std::vector<std::size_t>& perm);

/// Parses the text form; `arity` is the declared variable count.
Term parse_term(std::string_view text, std::size_t arity);

Elem eval(const Term& t, const FiniteAlgebra& a, std::span<const Elem> args);
inline Elem eval(const Term& t, const FiniteAlgebra& a, std::initializer_list<Elem> args) {
  return eval(t, a, std::span<const Elem>(args.begin(), args.size()));
}
/// Full table of the induced term operation, named `name`.
OperationTable realize_table(const Term& t, const FiniteAlgebra& a, const std::string& name = "t");

struct Identity {
  Term left;
  Term right;
};

/// First argument tuple (lexicographic) where the two sides differ, if any.
std::optional<std::vector<Elem>> check_identity(const FiniteAlgebra& a, const Identity& id);

}  // namespace idem
