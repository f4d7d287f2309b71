#pragma once

#include <cstdint>
#include <vector>

#include "idem/algebra.hpp"
#include "idem/edges.hpp"
#include "idem/term.hpp"

namespace idem {

/// Term operations of arity at most `max_arity` that preserve R = a/θ ∪ b/θ.
struct BoundedReduct {
  FiniteAlgebra base;
  Elem a = 0;
  Elem b = 0;
  ElemSet relation;
  std::size_t max_arity = 0;
  /// Same universe as `base`; operation i is realized on `base` by terms[i].
  FiniteAlgebra algebra;
  std::vector<Term> terms;
  /// Number of term operations of each arity 1..max_arity before filtering.
  std::vector<std::size_t> clone_sizes;
};

/// Arity-k term operations as the subalgebra of A^(|A|^k) generated by the k
/// projections. `work_cap` bounds operation applications per arity. Throws
/// PreconditionViolated (witness not semilattice or
/// majority), TooLarge (|A| > 4 with arity 3), CapExceeded.
BoundedReduct bounded_reduct(const FiniteAlgebra& a, const EdgeReport& report, std::size_t witness,
                             std::size_t max_arity = 3, std::size_t cap = 1'000'000,
                             std::uint64_t work_cap = 50'000'000);

struct ReductPairDiff {
  Elem a = 0;
  Elem b = 0;
  std::vector<EdgeType> base_types;
  std::vector<EdgeType> reduct_types;
};

struct ReductDiff {
  std::size_t max_arity = 0;
  std::vector<ReductPairDiff> pairs;  // every pair, a < b
  bool new_unary = false;
  bool new_affine = false;
  bool identical = true;
};

ReductDiff reduct_edge_report(const BoundedReduct& r, const Limits& limits = {});

}  // namespace idem
