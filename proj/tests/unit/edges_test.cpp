#include <doctest.h>

#include "idem/edges.hpp"
#include "idem/fixtures.hpp"

using namespace idem;
namespace fx = idem::fixtures;

TEST_CASE("classify_pair examples") {
  const FiniteAlgebra ne = fx::no_edge();
  const EdgeReport ac = classify_pair(ne, 0, 2);
  CHECK(ac.types() == std::vector{EdgeType::Semilattice});
  CHECK(ac.subalgebra == ElemSet{0, 2});
  REQUIRE(ac.witnesses.size() == 1);
  CHECK(ac.witnesses[0].theta.is_equality());
  CHECK(ac.witnesses[0].absorber == Elem{2});
  const EdgeReport ab = classify_pair(ne, 0, 1);
  CHECK_FALSE(ab.is_edge);
  CHECK_FALSE(ab.unknown);

  const FiniteAlgebra z = fx::z3_affine();
  const EdgeReport z01 = classify_pair(z, 0, 1);
  CHECK(z01.types() == std::vector{EdgeType::Affine});
  CHECK(z01.witnesses[0].theta.is_equality());
  CHECK(z01.witnesses[0].quotient_kind == SimpleKind::Module);

  CHECK(classify_pair(fx::mj2(), 0, 1).types() == std::vector{EdgeType::Majority});
  const FiniteAlgebra p("p", 2, {}, {OperationTable("f", 2, 2, {0, 0, 1, 1})});
  CHECK(classify_pair(p, 0, 1).types() == std::vector{EdgeType::Unary});
}

TEST_CASE("no-edge-factor pair") {
  const FiniteAlgebra c = fx::no_edge_factor();
  const EdgeReport r = classify_pair(c, pair_element(0, 0, 2), pair_element(1, 1, 2));
  CHECK(r.types() == std::vector{EdgeType::Majority});
  bool no_label = false;
  for (const auto& w : r.witnesses) no_label = no_label || w.outcome == EdgeWitness::Outcome::NoLabel;
  CHECK(no_label);
}

TEST_CASE("witness terms are re-verifiable") {
  for (const auto& n : fx::names()) {
    const FiniteAlgebra a = fx::by_name(n);
    for (const EdgeReport& r : structure_graph(a).reports) {
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        const EdgeWitness& w = r.witnesses[i];
        if (!w.label || *w.label == EdgeType::Unary) continue;
        REQUIRE(w.witness);
        const ElemSet ba = r.block(i, r.a), bb = r.block(i, r.b);
        const Elem x = r.a, y = r.b;
        if (*w.label == EdgeType::Semilattice) {
          const ElemSet top = r.block(i, *w.absorber);
          CHECK(top.contains(eval(*w.witness, a, {x, y})));
          CHECK(top.contains(eval(*w.witness, a, {y, x})));
        } else if (*w.label == EdgeType::Majority) {
          CHECK(ba.contains(eval(*w.witness, a, {x, x, y})));
          CHECK(ba.contains(eval(*w.witness, a, {x, y, x})));
          CHECK(ba.contains(eval(*w.witness, a, {y, x, x})));
          CHECK(bb.contains(eval(*w.witness, a, {y, y, x})));
        } else {
          CHECK(bb.contains(eval(*w.witness, a, {x, x, y})));
          CHECK(ba.contains(eval(*w.witness, a, {x, y, y})));
        }
      }
    }
  }
}

TEST_CASE("graphs and connectivity") {
  const FiniteAlgebra ne = fx::no_edge();
  CHECK(is_connected(structure_graph(ne)));
  const StructureGraph h = hypergraph(ne);
  CHECK(h.hyperedges.size() == 5);
  CHECK(is_connected(h));
  StructureGraph empty;
  empty.size = 2;
  empty.labels = {"0", "1"};
  CHECK_FALSE(is_connected(empty));
  CHECK_FALSE(x_connected(ne, {EdgeType::Semilattice}));
  const auto z = x_connected(fx::z3_affine(), {EdgeType::Semilattice, EdgeType::Majority});
  REQUIRE(z);
  CHECK(z->subalgebra == ElemSet::full(3));
  CHECK(z->a == 0);
  CHECK(z->b == 1);
  CHECK_FALSE(x_connected(fx::trivial(), {}));
  const auto comps = connected_components(structure_graph(ne), {EdgeType::Majority});
  CHECK(comps.block_count() == ne.size());
  const auto sl = connected_components(structure_graph(fx::no_edge_factor()), {EdgeType::Semilattice});
  CHECK(sl.block_count() == 1);
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(fx::no_edge()));
  CHECK(is_smooth(fx::mj2()));
  CHECK(is_smooth(fx::no_majority_symmetry()));
}
