#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "idem/fixtures.hpp"
#include "idem/genclose.hpp"

using namespace idem;
namespace fx = idem::fixtures;

TEST_CASE("generate_subalgebra examples") {
  const FiniteAlgebra ne = fx::no_edge();
  const GenerationTrace t = generate_subalgebra(ne, std::vector<Elem>{0, 1});
  CHECK(t.universe == ElemSet::full(3));
  CHECK(witness_term(t, ne, 2).to_string() == "f(p0, p1)");
  CHECK(witness_term(t, ne, 0) == proj(0, 2));
  CHECK(witness_term(t, ne, 1) == proj(1, 2));
  for (const auto& n : fx::names()) {
    const FiniteAlgebra a = fx::by_name(n);
    for (Elem x = 0; x < a.size(); ++x) CHECK(sg(a, ElemSet{x}) == ElemSet{x});
  }
  const FiniteAlgebra z = fx::z3_affine();
  const GenerationTrace tz = generate_subalgebra(z, std::vector<Elem>{0, 1});
  CHECK(tz.universe == ElemSet::full(3));
  CHECK(eval(witness_term(tz, z, 2), z, {0, 1}) == 2);
}

TEST_CASE("witness terms replay on random algebras") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const FiniteAlgebra a = oracle::random_algebra(rng, 2 + rng() % 4, i % 3);
    std::vector<Elem> gens{static_cast<Elem>(rng() % a.size()), static_cast<Elem>(rng() % a.size())};
    const GenerationTrace t = generate_subalgebra(a, gens);
    std::vector<oracle::Tuple> one;
    for (Elem g : gens) one.push_back({g});
    const auto naive = oracle::naive_closure(a, one, 1000);
    CHECK(t.universe.size() == naive->size());
    for (Elem e : t.universe.elements()) {
      CHECK(naive->contains({e}));
      std::vector<Elem> args;
      for (Elem g : t.generators) args.push_back(g);
      CHECK(eval(witness_term(t, a, e), a, args) == e);
    }
  }
}

TEST_CASE("all_subalgebras") {
  CHECK(all_subalgebras(fx::no_edge()) ==
        std::vector<ElemSet>{ElemSet{0}, ElemSet{1}, ElemSet{2}, ElemSet{0, 2}, ElemSet{1, 2}, ElemSet{0, 1, 2}});
  CHECK(all_subalgebras(fx::trivial()) == std::vector<ElemSet>{ElemSet{0}});
  CHECK(all_subalgebras(fx::mj2()) == std::vector<ElemSet>{ElemSet{0}, ElemSet{1}, ElemSet{0, 1}});
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const FiniteAlgebra a = oracle::random_algebra(rng, 2 + rng() % 3, i % 3);
    std::vector<ElemSet> brute;
    for (std::uint64_t bits = 1; bits < (1u << a.size()); ++bits) {
      if (is_subuniverse(a, ElemSet(bits))) brute.push_back(ElemSet(bits));
    }
    std::sort(brute.begin(), brute.end());
    CHECK(all_subalgebras(a) == brute);
  }
}

TEST_CASE("subpower membership examples") {
  const FiniteAlgebra ne = fx::no_edge();
  SubpowerQuery q{&ne, 2, {{0, 2}, {2, 0}}, {2, 2}};
  SubpowerAnswer r = subpower_membership(q);
  REQUIRE(r.status == SubpowerAnswer::Status::Found);
  CHECK(eval(*r.witness, ne, {0, 2}) == 2);
  CHECK(eval(*r.witness, ne, {2, 0}) == 2);
  q.target = {2, 0};
  r = subpower_membership(q);
  CHECK(r.status == SubpowerAnswer::Status::Found);
  CHECK(*r.witness == proj(1, 2));
  q.generators = {{0, 0}, {1, 1}};
  q.target = {0, 1};
  CHECK(subpower_membership(q).status == SubpowerAnswer::Status::Absent);
}

TEST_CASE("find_pair_witness examples") {
  const Subalgebra ac = restrict(fx::no_edge(), ElemSet{0, 2});
  const PairWitness s = find_pair_witness(ac.algebra, WitnessKind::Semilattice, 0, 1);
  CHECK(s.status == SubpowerAnswer::Status::Found);
  CHECK(s.absorber == Elem{1});
  const PairWitness m = find_pair_witness(fx::z3_affine(), WitnessKind::Maltsev, 0, 0);
  REQUIRE(m.status == SubpowerAnswer::Status::Found);
  CHECK(m.witness->to_string() == "h(p0, p1, p2)");
  CHECK(find_pair_witness(fx::sl2(), WitnessKind::Majority, 0, 1).status == SubpowerAnswer::Status::Absent);
  CHECK(find_pair_witness(fx::mj2(), WitnessKind::Majority, 0, 1).status == SubpowerAnswer::Status::Found);
}

TEST_CASE("subpower answers agree with a naive closure") {
  std::mt19937_64 rng(29);
  std::size_t compared = 0, absent = 0;
  for (int i = 0; i < 300; ++i) {
    const FiniteAlgebra a = oracle::random_algebra(rng, 2 + rng() % 3, i % 3);
    const std::size_t k = 2 + rng() % 5;
    SubpowerQuery q{&a, k, {}, {}};
    const std::size_t g = 2 + rng() % 2;
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<Elem> t(k);
      for (auto& e : t) e = static_cast<Elem>(rng() % a.size());
      q.generators.push_back(t);
    }
    q.target.resize(k);
    for (auto& e : q.target) e = static_cast<Elem>(rng() % a.size());
    const auto naive = oracle::naive_closure(a, q.generators, 300);
    if (!naive) continue;
    const SubpowerAnswer r = subpower_membership(q);
    ++compared;
    CHECK((r.status == SubpowerAnswer::Status::Found) == naive->contains(q.target));
    if (r.status == SubpowerAnswer::Status::Absent) ++absent;
    if (r.status == SubpowerAnswer::Status::Found) {
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<Elem> args;
        for (const auto& gen : q.generators) args.push_back(gen[c]);
        CHECK(eval(*r.witness, a, args) == q.target[c]);
      }
    }
  }
  CHECK(compared > 100);
  CHECK(absent > 20);
}

TEST_CASE("closure caps") {
  const FiniteAlgebra z = fx::z3_affine();
  SubpowerQuery q{&z, 6, {{0, 1, 2, 0, 1, 2}, {0, 0, 0, 1, 1, 1}, {2, 1, 0, 2, 1, 0}}, {1, 1, 1, 1, 1, 2}, 5};
  CHECK(subpower_membership(q).status == SubpowerAnswer::Status::CapExceeded);
  TupleClosure c(z, 3, {{0, 1, 2}, {1, 2, 0}}, 1000);
  c.set_work_cap(1);
  CHECK(c.run() == TupleClosure::Status::CapExceeded);
  CHECK(c.work_exceeded());
}
