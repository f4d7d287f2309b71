#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idem/algebra.hpp"
#include "idem/congruence.hpp"
#include "idem/term.hpp"

namespace idem {

enum class EdgeType { Unary, Semilattice, Majority, Affine };
std::string_view to_string(EdgeType type);

/// Outcome of one maximal congruence of Sg{a,b}.
struct EdgeWitness {
  enum class Outcome { Labeled, NoLabel, Inconclusive };
  /// Congruence of the subalgebra, in its local indices (see EdgeReport::embedding).
  Congruence theta;
  Outcome outcome = Outcome::NoLabel;
  std::optional<EdgeType> label;
  /// Semilattice: binary term with t(a,b) = t(b,a) = absorber on the quotient.
  /// Majority: ternary term majority on the pair of blocks. Affine: Mal'tsev term of the quotient.
  std::optional<Term> witness;
  std::optional<Elem> absorber;  // parent element (a or b), semilattice only
  SimpleKind quotient_kind = SimpleKind::Other;
  std::size_t quotient_size = 0;
};

struct EdgeReport {
  Elem a = 0;
  Elem b = 0;
  ElemSet subalgebra;
  /// Local index -> parent element, increasing.
  std::vector<Elem> embedding;
  std::vector<EdgeWitness> witnesses;
  bool is_edge = false;
  /// Not an edge by any conclusive congruence, but some congruence hit the cap.
  bool unknown = false;

  std::vector<EdgeType> types() const;
  bool has_type(EdgeType t) const;
  /// Block of the parent element x under witness i, as parent elements.
  ElemSet block(std::size_t i, Elem x) const;
};

EdgeReport classify_pair(const FiniteAlgebra& a, Elem x, Elem y, std::size_t cap = 1'000'000);

struct TypedEdge {
  Elem a;
  Elem b;
  EdgeType type;
};

struct StructureGraph {
  std::size_t size = 0;
  std::vector<std::string> labels;
  std::vector<EdgeReport> reports;  // pairs a < b, lexicographic
  std::vector<TypedEdge> edges;     // one per (pair, distinct type)
  /// Hyperedges (proper subuniverses); empty for the plain graph.
  std::vector<ElemSet> hyperedges;
};

StructureGraph structure_graph(const FiniteAlgebra& a, const Limits& limits = {});
/// Hypergraph whose hyperedges are the proper subuniverses.
StructureGraph hypergraph(const FiniteAlgebra& a, const Limits& limits = {});

/// Components of the graph (or of the hypergraph when hyperedges are present).
Congruence connected_components(const StructureGraph& g);
bool is_connected(const StructureGraph& g);
/// Components when only edges with a type in `allowed` are kept.
Congruence connected_components(const StructureGraph& g, const std::set<EdgeType>& allowed);

struct ConnectivityCounterexample {
  ElemSet subalgebra;
  Elem a = 0;
  Elem b = 0;
};

/// Every subuniverse B and a, b in B are joined in G(B) by edges with a type in X.
std::optional<ConnectivityCounterexample> x_connected(const FiniteAlgebra& a, const std::set<EdgeType>& allowed,
                                                      const Limits& limits = {});

struct SmoothnessCounterexample {
  Elem a = 0;
  Elem b = 0;
  EdgeType type = EdgeType::Semilattice;
  std::string theta;
  ElemSet blocks;  // a/θ ∪ b/θ, parent elements
};

/// Every thick semilattice or majority edge a/θ ∪ b/θ is a subuniverse of A.
std::optional<SmoothnessCounterexample> smoothness_violation(const FiniteAlgebra& a, const Limits& limits = {});
bool is_smooth(const FiniteAlgebra& a, const Limits& limits = {});

}  // namespace idem
