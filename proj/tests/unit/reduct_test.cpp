#include <doctest.h>

#include <set>

#include "idem/edges.hpp"
#include "idem/fixtures.hpp"
#include "idem/reduct.hpp"

using namespace idem;
namespace fx = idem::fixtures;

namespace {
std::size_t first_witness(const EdgeReport& r) {
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (r.witnesses[i].label == EdgeType::Semilattice || r.witnesses[i].label == EdgeType::Majority) return i;
  }
  FAIL("no witness");
  return 0;
}
}  // namespace

TEST_CASE("reduct of no-edge at ac") {
  const FiniteAlgebra ne = fx::no_edge();
  const EdgeReport r = classify_pair(ne, 0, 2);
  const BoundedReduct red = bounded_reduct(ne, r, first_witness(r), 2);
  CHECK(red.relation == ElemSet{0, 2});
  std::set<std::vector<Elem>> tables;
  for (const auto& op : red.algebra.operations()) tables.insert(op.table());
  CHECK(tables.contains(ne.find("f")->table()));
  CHECK(tables.contains(ne.find("g")->table()));
  const ReductDiff d = reduct_edge_report(red);
  CHECK_FALSE(d.new_unary);
  for (std::size_t i = 0; i < red.terms.size(); ++i) {
    CHECK(realize_table(red.terms[i], ne).table() == red.algebra.operation(i).table());
  }
}

TEST_CASE("reduct with the whole universe as relation keeps the edge report") {
  const FiniteAlgebra c = fx::no_edge_factor();
  const EdgeReport r = classify_pair(c, pair_element(0, 0, 2), pair_element(1, 1, 2));
  std::size_t i = 0;
  while (r.witnesses[i].label != EdgeType::Majority) ++i;
  const BoundedReduct red = bounded_reduct(c, r, i, 2);
  CHECK(red.relation == ElemSet::full(6));
  CHECK(red.algebra.operations().size() == red.clone_sizes[0] + red.clone_sizes[1]);
  CHECK(reduct_edge_report(red).identical == false);
}

TEST_CASE("SL2 reduct is unchanged") {
  const FiniteAlgebra s = fx::sl2();
  const EdgeReport r = classify_pair(s, 0, 1);
  const ReductDiff d = reduct_edge_report(bounded_reduct(s, r, first_witness(r), 2));
  CHECK(d.identical);
}

TEST_CASE("arity 1 keeps only the identity") {
  const FiniteAlgebra ne = fx::no_edge();
  const EdgeReport r = classify_pair(ne, 0, 2);
  const BoundedReduct red = bounded_reduct(ne, r, first_witness(r), 1);
  REQUIRE(red.algebra.operations().size() == 1);
  CHECK(red.algebra.operation(0).projection_index() == 0);
}

TEST_CASE("arity-2 operations embed into arity 3") {
  for (const auto& name : {"no-edge", "mj2", "sl2"}) {
    const FiniteAlgebra a = fx::by_name(name);
    const StructureGraph g = structure_graph(a);
    const EdgeReport* rep = nullptr;
    for (const auto& r : g.reports) {
      if (r.has_type(EdgeType::Semilattice) || r.has_type(EdgeType::Majority)) {
        rep = &r;
        break;
      }
    }
    REQUIRE(rep);
    const BoundedReduct r2 = bounded_reduct(a, *rep, first_witness(*rep), 2);
    const BoundedReduct r3 = bounded_reduct(a, *rep, first_witness(*rep), 3);
    std::set<std::vector<Elem>> ternary;
    for (const auto& op : r3.algebra.operations()) {
      if (op.arity() == 3) ternary.insert(op.table());
    }
    for (const auto& op : r2.algebra.operations()) {
      if (op.arity() != 2) continue;
      std::vector<Elem> lifted;
      for (std::size_t i = 0; i < checked_pow(a.size(), 3); ++i) {
        const auto t = tuple_at(i, 3, a.size());
        lifted.push_back(op({t[0], t[1]}));
      }
      CHECK(ternary.contains(lifted));
    }
  }
}

TEST_CASE("reduct preconditions and caps") {
  const FiniteAlgebra z = fx::z3_affine();
  const EdgeReport r = classify_pair(z, 0, 1);
  CHECK_THROWS_AS(bounded_reduct(z, r, 0, 2), Error);
  const FiniteAlgebra c = fx::no_edge_factor();
  const EdgeReport rc = classify_pair(c, 0, 3);
  try {
    bounded_reduct(c, rc, first_witness(rc), 3);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  const FiniteAlgebra nms = fx::no_majority_symmetry();
  const EdgeReport rn = classify_pair(nms, 0, 1);
  try {
    bounded_reduct(nms, rn, first_witness(rn), 3, 1'000'000, 100'000);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}
