#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idem/algebra.hpp"
#include "idem/edges.hpp"
#include "idem/term.hpp"
#include "idem/thin.hpp"

namespace idem {

/// One thick edge {a/θ, b/θ} of a class member, with the quotient Sg{a,b}/θ.
struct ThickEdge {
  std::size_t member = 0;
  Elem a = 0;
  Elem b = 0;
  EdgeType type = EdgeType::Semilattice;
  ElemSet subalgebra;
  std::string theta;
  FiniteAlgebra quotient;
  Elem qa = 0;
  Elem qb = 0;
  /// Semilattice on {qa,qb}, majority on {qa,qb}, or Mal'tsev on the quotient.
  Term witness;
  ElemSet block_a;
  ElemSet block_b;

  std::string describe(const std::vector<FiniteAlgebra>& members) const;
};

struct EdgeInventory {
  /// The class brought to a common signature.
  std::vector<FiniteAlgebra> members;
  std::vector<StructureGraph> graphs;
  std::vector<ThickEdge> semilattice;
  std::vector<ThickEdge> majority;
  std::vector<ThickEdge> affine;
};

/// Thick edges of every member, deduplicated by (member, Sg{a,b}, θ, blocks).
/// Throws NotSmooth, CapExceeded (undecided pair), PreconditionViolated (unary edge).
EdgeInventory build_edge_inventory(const std::vector<FiniteAlgebra>& algebras, const Limits& limits = {});

enum class Equation {
  Absorb,       // f(x,f(x,y)) = f(x,y)
  FlipAbsorb,   // f(f(x,y),f(y,x)) = f(x,y)
  MajAbsorb,    // m(x,m(x,y,y),m(x,y,y)) = m(x,y,y)
  MajCyclic,    // m(m(x,y,z),m(y,z,x),m(z,x,y)) = m(x,y,z)
  HAbsorb,      // h(h(x,y,y),y,y) = h(x,y,y)
};
std::string_view to_string(Equation e);
Identity equation_identity(Equation e, const Term& op);

/// Iterated composition with an exponent computed from the realized tables,
/// so that the equation holds on every member. Returns `op` itself when the
/// equation already holds. Throws PostconditionFailed if it still fails.
Term normalize_identities(const std::vector<FiniteAlgebra>& members, const Term& op, Equation which);

/// Smallest n >= 1 with T^n idempotent, over all maps added.
class IdempotentExponent {
 public:
  void add(const std::vector<std::uint32_t>& map);
  std::uint64_t value() const;

 private:
  std::uint64_t period_ = 1;
  std::uint64_t tail_ = 0;
};

/// Binary f, restricted to each module quotient as αx+(1-α)y, turned into the
/// first projection there: f' = iterate x -> f(x,y) to an idempotent power,
/// then f''(x,y) = f'(f'(x,y),x).
Term module_projection_fix(const Term& f, const std::vector<const FiniteAlgebra*>& modules);
/// p(x,y) with p = x on the pair {qa,qb} of a majority edge and p = y on every
/// module quotient, by the case split on h restricted to the pair. `m` is
/// majority on the pair. Throws CaseNotRecognized.
Term projection_separator(const ThickEdge& c, const std::vector<const FiniteAlgebra*>& modules, const Term& h,
                          const Term& m);
/// m'(x,y,z) = p(m(x,y,z), x): equal to m on the pair, first projection on the modules.
Term module_projection_fix(const Term& m, const ThickEdge& c, const std::vector<const FiniteAlgebra*>& modules,
                           const Term& h);

struct CheckOutcome {
  std::string condition;
  std::string where;
  bool ok = true;
  std::vector<Elem> tuple;
};

struct UniformOps {
  DistinguishedOps ops;
  EdgeInventory inventory;
  std::vector<CheckOutcome> checks;
  bool ok() const;
};

/// All conditions on f, g, h, recomputed by exhaustive evaluation.
std::vector<CheckOutcome> verify_uniform(const EdgeInventory& inv, const DistinguishedOps& ops);

/// Throws VerificationFailed(condition, edge, tuple) if any check fails.
UniformOps uniform_ops(const std::vector<FiniteAlgebra>& algebras, const Limits& limits = {});

/// A directed thin edge of one class member.
struct MemberEdge {
  std::size_t member = 0;
  Elem a = 0;
  Elem b = 0;
  ThinKind kind = ThinKind::ThinSemilattice;
};

/// g''' with g'''(a1,b1,b1)=b1, g'''(b2,a2,b2)=b2, g'''(b3,b3,a3)=b3, majority on every thick majority edge.
Term majority_triple(const UniformOps& u, const MemberEdge& e1, const MemberEdge& e2, const MemberEdge& e3);
/// h' with h'(b,a,a)=b and h'(c,c,d)=d.
Term affine_pair(const UniformOps& u, const MemberEdge& e1, const MemberEdge& e2);
/// Binary p with p(b,a)=b and p(c,d)=d for thin edges of different types.
Term mixed_pair(const UniformOps& u, const MemberEdge& e1, const MemberEdge& e2);
/// t_ab (thin majority edge) or h_ab (thin affine edge).
Term affine_stable_op(const UniformOps& u, const MemberEdge& e);

}  // namespace idem
