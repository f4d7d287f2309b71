#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "idem/congruence.hpp"
#include "idem/fixtures.hpp"
#include "idem/genclose.hpp"

using namespace idem;
namespace fx = idem::fixtures;

TEST_CASE("cg examples") {
  CHECK(cg(fx::no_edge(), {{0, 1}}).is_total());
  CHECK(cg(fx::no_edge(), {}).is_equality());
  CHECK(cg(fx::no_majority_symmetry(), {{0, 2}}) == Congruence::from_blocks(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("congruence lattice examples") {
  CHECK(congruence_lattice(fx::no_edge()).size() == 2);
  const auto nms = congruence_lattice(fx::no_majority_symmetry());
  const Congruence theta = Congruence::from_blocks(4, {{0, 2}, {1, 3}});
  CHECK(std::find(nms.begin(), nms.end(), theta) != nms.end());
  CHECK(congruence_lattice(fx::trivial()).size() == 1);
  CHECK(maximal_congruences(fx::no_edge()) == std::vector{Congruence::equality(3)});
  const auto max_nms = maximal_congruences(fx::no_majority_symmetry());
  CHECK(std::find(max_nms.begin(), max_nms.end(), theta) != max_nms.end());
  CHECK(maximal_congruences(fx::trivial()).empty());
}

TEST_CASE("projection kernels of a product of simple algebras are maximal") {
  const FiniteAlgebra c = product(fx::z3_affine(), fx::z3_affine());
  std::vector<std::size_t> first(9), second(9);
  for (Elem e = 0; e < 9; ++e) {
    first[e] = e / 3;
    second[e] = e % 3;
  }
  const auto m = maximal_congruences(c);
  CHECK(std::find(m.begin(), m.end(), Congruence::from_labels(first)) != m.end());
  CHECK(std::find(m.begin(), m.end(), Congruence::from_labels(second)) != m.end());
}

TEST_CASE("congruence lattice agrees with brute-force partition enumeration") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const FiniteAlgebra a = oracle::random_algebra(rng, 2 + rng() % 3, i % 3);
    std::vector<Congruence> brute;
    for (const auto& labels : oracle::brute_congruences(a)) brute.push_back(Congruence::from_labels(labels));
    std::sort(brute.begin(), brute.end());
    auto lattice = congruence_lattice(a);
    std::sort(lattice.begin(), lattice.end());
    CHECK(lattice == brute);
  }
  for (const auto& n : fx::names()) {
    const FiniteAlgebra a = fx::by_name(n);
    CHECK(congruence_lattice(a).size() == oracle::brute_congruences(a).size());
  }
}

TEST_CASE("tolerances") {
  const ToleranceResult eq = tolerance_ops(fx::no_edge(), {});
  CHECK(eq.tolerance.is_equality());
  CHECK(eq.classes.size() == 3);
  const ToleranceResult s = tolerance_ops(fx::sl2(), {{0, 1}});
  CHECK(s.tolerance.is_total());
  CHECK(s.classes == std::vector<ElemSet>{ElemSet{0, 1}});
  std::mt19937_64 rng(37);
  const FiniteAlgebra ne = fx::no_edge();
  for (int i = 0; i < 50; ++i) {
    const ToleranceResult t = tolerance_ops(ne, {{static_cast<Elem>(rng() % 3), static_cast<Elem>(rng() % 3)}});
    for (ElemSet c : t.classes) CHECK(is_subuniverse(ne, c));
  }
}

TEST_CASE("link tolerances") {
  for (const auto& n : fx::names()) {
    const FiniteAlgebra a = fx::by_name(n);
    std::vector<std::vector<Elem>> diag, all;
    for (Elem x = 0; x < a.size(); ++x) {
      diag.push_back({x, x});
      for (Elem y = 0; y < a.size(); ++y) all.push_back({x, y});
    }
    CHECK(link_tolerance(a, diag, 0).is_equality());
    CHECK(link_tolerance(a, all, 1).is_total());
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem y = x + 1; y < a.size(); ++y) {
        TupleClosure c(a, 2, {{x, y}, {y, x}}, 100000);
        c.run();
        std::vector<std::vector<Elem>> rel;
        for (std::size_t i = 0; i < c.size(); ++i) rel.push_back(c.tuple(i));
        // Projections of Sg{(x,y),(y,x)} are Sg{x,y}; restrict to it.
        const Subalgebra sub = restrict(a, sg(a, ElemSet{x, y}));
        for (auto& t : rel) t = {sub.local(t[0]), sub.local(t[1])};
        CHECK(is_compatible(sub.algebra, link_tolerance(sub.algebra, rel, 0)));
      }
    }
  }
  CHECK_THROWS_AS(link_tolerance(fx::sl2(), {{0, 0}}, 0), Error);
}

TEST_CASE("is_abelian examples and oracle") {
  CHECK(is_abelian(fx::z3_affine()));
  CHECK_FALSE(is_abelian(fx::sl2()));
  const FiniteAlgebra q =
      quotient(fx::no_majority_symmetry(), Congruence::from_blocks(4, {{0, 2}, {1, 3}})).algebra;
  CHECK_FALSE(is_abelian(q));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const FiniteAlgebra a = oracle::random_algebra(rng, 2 + rng() % 2, i % 3);
    CHECK(is_abelian(a) == oracle::term_condition_arity3(a));
  }
}

TEST_CASE("simple quotient classification") {
  const FiniteAlgebra q =
      quotient(fx::no_majority_symmetry(), Congruence::from_blocks(4, {{0, 2}, {1, 3}})).algebra;
  CHECK(classify_simple_quotient(q) == SimpleKind::Other);
  CHECK(classify_simple_quotient(fx::z3_affine()) == SimpleKind::Module);
  const FiniteAlgebra p("p", 2, {}, {OperationTable("f", 2, 2, {0, 0, 1, 1})});
  CHECK(classify_simple_quotient(p) == SimpleKind::Set);
}

TEST_CASE("absorbing elements") {
  CHECK(absorbing_elements(fx::sl2()).elements.elements() == std::vector<Elem>{0});
  CHECK(absorbing_elements(fx::z3_affine()).elements.empty());
  CHECK(absorbing_elements(fx::no_edge()).elements.elements() == std::vector<Elem>{2});
}
