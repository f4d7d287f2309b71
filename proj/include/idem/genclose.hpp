#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idem/algebra.hpp"
#include "idem/term.hpp"

namespace idem {

/// How one element of a generated subuniverse was obtained.
struct GenerationStep {
  bool is_generator = false;
  std::size_t generator = 0;  // index into the generator list
  std::size_t op = 0;         // operation index in the algebra
  std::vector<Elem> args;     // elements, each generated earlier
};

struct GenerationTrace {
  std::vector<Elem> generators;
  /// Elements in generation order.
  std::vector<Elem> order;
  /// Indexed by element; meaningful only for members of `universe`.
  std::vector<GenerationStep> steps;
  ElemSet universe;
};

/// Breadth-first closure with provenance: rounds of new elements, operations
/// in declaration order, argument tuples lexicographic by generation order.
/// Duplicate generators are dropped (first occurrence kept).
GenerationTrace generate_subalgebra(const FiniteAlgebra& a, const std::vector<Elem>& generators);
GenerationTrace generate_subalgebra(const FiniteAlgebra& a, ElemSet generators);

/// Witness term over the trace's generators (arity = number of generators).
Term witness_term(const GenerationTrace& trace, const FiniteAlgebra& a, Elem e);

/// Sg(S) without provenance.
ElemSet sg(const FiniteAlgebra& a, ElemSet s);
bool is_subuniverse(const FiniteAlgebra& a, ElemSet s);

/// Every subuniverse, sorted by (size, elements). Includes the full universe.
std::vector<ElemSet> all_subalgebras(const FiniteAlgebra& a, const Limits& limits = {});

/// Closure of a set of tuples of A^k under coordinatewise operations, with
/// provenance for every tuple. Tuples are stored packed, one byte per coordinate.
class TupleClosure {
 public:
  enum class Status { Complete, TargetFound, CapExceeded };

  TupleClosure(const FiniteAlgebra& a, std::size_t k, const std::vector<std::vector<Elem>>& generators,
               std::size_t cap);

  /// Runs until the closure is complete, one of the targets appears, or the
  /// cap is hit. Targets are checked in the order generated.
  Status run(const std::vector<std::vector<Elem>>& targets = {});

  std::size_t size() const { return count_; }
  std::size_t coordinates() const { return k_; }
  std::vector<Elem> tuple(std::size_t i) const;
  std::optional<std::size_t> find(const std::vector<Elem>& t) const;
  /// Index of the target that stopped the run.
  std::optional<std::size_t> found_target() const { return found_target_; }
  std::optional<std::size_t> found_index() const { return found_index_; }
  /// Term of arity = number of generators evaluating to tuple i coordinatewise.
  Term witness(std::size_t i);
  std::size_t rounds() const { return rounds_; }
  /// Bound on operation applications (0 = none); exceeding it also reports CapExceeded.
  void set_work_cap(std::uint64_t cap) { work_cap_ = cap; }
  std::uint64_t work() const { return work_; }
  bool work_exceeded() const { return work_cap_ != 0 && work_ > work_cap_; }

 private:
  bool insert(const std::uint8_t* t, std::uint32_t op, const std::uint32_t* args, std::size_t arity);
  std::size_t hash(const std::uint8_t* t) const;
  const std::uint8_t* data(std::size_t i) const { return tuples_.data() + i * k_; }

  const FiniteAlgebra& a_;
  std::size_t k_;
  std::size_t cap_;
  std::size_t generator_count_;
  std::size_t count_ = 0;
  std::size_t rounds_ = 0;
  std::uint64_t work_cap_ = 0;
  std::uint64_t work_ = 0;
  std::size_t level_start_ = 0;
  std::vector<std::uint8_t> tuples_;
  std::vector<std::uint32_t> slots_;  // open addressing, 0 = empty, else index + 1
  std::vector<std::uint32_t> prov_op_;     // UINT32_MAX for generators
  std::vector<std::uint32_t> prov_start_;  // offset into prov_args_, or generator index
  std::vector<std::uint32_t> prov_args_;
  std::vector<std::vector<std::uint8_t>> targets_;
  std::optional<std::size_t> found_target_;
  std::optional<std::size_t> found_index_;
  std::vector<Term> witness_memo_;
};

struct SubpowerQuery {
  const FiniteAlgebra* algebra = nullptr;
  std::size_t k = 0;
  std::vector<std::vector<Elem>> generators;
  std::vector<Elem> target;
  std::size_t cap = 1'000'000;
};

struct SubpowerAnswer {
  enum class Status { Found, Absent, CapExceeded };
  Status status = Status::Absent;
  std::optional<Term> witness;
  std::size_t closure_size = 0;
  std::size_t cap = 0;
};

SubpowerAnswer subpower_membership(const SubpowerQuery& q);

enum class WitnessKind { Semilattice, Majority, Maltsev };

struct PairWitness {
  SubpowerAnswer::Status status = SubpowerAnswer::Status::Absent;
  std::optional<Term> witness;
  /// Semilattice only: the element that absorbs (t(a,b) = t(b,a) = absorber).
  std::optional<Elem> absorber;
  std::size_t closure_size = 0;
};

/// Term-existence questions on a pair (Maltsev: on all of D; a, b unused).
PairWitness find_pair_witness(const FiniteAlgebra& d, WitnessKind kind, Elem a, Elem b,
                              std::size_t cap = 1'000'000);

}  // namespace idem
