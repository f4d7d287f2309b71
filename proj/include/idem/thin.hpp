#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idem/algebra.hpp"
#include "idem/edges.hpp"
#include "idem/term.hpp"

namespace idem {

/// The operations f (binary), g and h (ternary) shared by a class of similar
/// algebras. Terms are over the common signature.
struct DistinguishedOps {
  Term f;
  Term g;
  Term h;
  /// Number of SLS shift rounds applied to f.
  std::uint64_t sls_rounds = 0;
};

struct SlsResult {
  Term term;
  std::uint64_t rounds = 0;
};

/// f' = f_l with f_0 = f0, f_{i+1}(x,y) = f0(x, f0(f_i(x,y), x)), l the largest
/// stabilization index of Sg{a, b_i} over all members and pairs with f0(a,b) != a.
/// Throws PostconditionFailed with a counterexample pair if f' is not SLS.
SlsResult synth_sls(const std::vector<FiniteAlgebra>& members, const Term& f0);
SlsResult synth_sls(const FiniteAlgebra& a, const Term& f0);

/// (a,b) with f(a,b) = f(b,a) = b, a != b.
std::vector<std::pair<Elem, Elem>> thin_semilattice_order(const FiniteAlgebra& a, const Term& f);

/// For every y' in y_block: y in Sg{x, y'}.
bool is_minimal_pair(const FiniteAlgebra& a, Elem x, Elem y, ElemSet y_block);
/// Minimality with respect to witness i of the report, restricted to Sg{x,y}.
bool is_minimal_pair(const FiniteAlgebra& a, const EdgeReport& report, std::size_t i, Elem x, Elem y);

enum class ThinKind { ThinSemilattice, SpecialThinMajority, ThinAffine };
std::string_view to_string(ThinKind kind);

struct ThinEdge {
  Elem a = 0;
  Elem b = 0;
  ThinKind kind = ThinKind::ThinSemilattice;
  /// Congruence of Sg{a,b} restricted from the thick edge (empty for semilattice).
  std::string theta;
  /// Block of b under that congruence, parent elements.
  ElemSet b_block;
  bool minimal = false;
  /// check_thin_necessary with the distinguished operations, when known.
  std::optional<bool> necessary;
  std::string certificate;
};

/// All (c,d) in a/θ x b/θ, and symmetrically b/θ x a/θ, minimal with respect to
/// θ restricted to Sg{c,d}. Throws EmptyResult if no such pair starts at a (resp. b).
std::vector<ThinEdge> find_special_thin_majority(const FiniteAlgebra& a, const EdgeReport& report, std::size_t i);

/// (a,b') with b' = h(b'',a,a) for b'' in b/θ with ab'' minimal, kept when
/// h(b',a,a) = b' and ab' is minimal; both orientations. Throws EmptyResult.
std::vector<ThinEdge> find_thin_affine(const FiniteAlgebra& a, const EdgeReport& report, std::size_t i,
                                       const Term& h);

/// Necessary conditions for a thin edge with the distinguished operation as
/// the single instance of the quantified one.
bool check_thin_necessary(const FiniteAlgebra& a, Elem x, Elem y, ThinKind kind, const DistinguishedOps& ops);

struct ThinGraph {
  std::size_t size = 0;
  std::vector<std::string> labels;
  std::vector<ThinEdge> arcs;  // sorted by (a, b, kind), no duplicates
};

ThinGraph thin_graph(const FiniteAlgebra& a, const DistinguishedOps& ops, const Limits& limits = {});
ThinGraph thin_graph(const FiniteAlgebra& a, const StructureGraph& g, const DistinguishedOps& ops);

/// Binary term t with t(x, y) = target on A, if target is in Sg{x, y}.
std::optional<Term> binary_witness(const FiniteAlgebra& a, Elem x, Elem y, Elem target);

}  // namespace idem
