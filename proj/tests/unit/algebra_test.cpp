#include <doctest.h>

#include "idem/algebra.hpp"
#include "idem/fixtures.hpp"

using namespace idem;
namespace fx = idem::fixtures;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::ParseError;
}

AlgebraDescription two_element(std::vector<Elem> table) {
  return AlgebraDescription{"t", 2, {}, {{"f", 2, std::move(table)}}};
}

}  // namespace

TEST_CASE("validate accepts the fixtures and rejects broken tables") {
  CHECK(validate_algebra(fx::no_edge().describe()).size() == 3);
  CHECK(validate_algebra(fx::z3_affine().describe()).size() == 3);
  CHECK(kind_of([] { validate_algebra(two_element({0, 1, 1, 0})); }) == ErrorKind::NonIdempotent);
  CHECK(kind_of([] { validate_algebra(two_element({0, 1, 1})); }) == ErrorKind::BadTableLength);
  CHECK(kind_of([] { validate_algebra(two_element({0, 2, 1, 1})); }) == ErrorKind::EntryOutOfRange);
  AlgebraDescription dup = two_element({0, 0, 0, 1});
  dup.operations.push_back(dup.operations.front());
  CHECK(kind_of([&] { validate_algebra(dup); }) == ErrorKind::DuplicateOpName);
  AlgebraDescription big{"big", 12, {}, {{"f", 1, {}}}};
  for (Elem x = 0; x < 12; ++x) big.operations[0].table.push_back(x);
  CHECK(kind_of([&] { validate_algebra(big); }) == ErrorKind::TooLarge);
  CHECK(validate_algebra(big, {}, true).size() == 12);
}

TEST_CASE("product encodes pairs as x*|B|+y and evaluates coordinatewise") {
  const FiniteAlgebra s = fx::sl2();
  const FiniteAlgebra p = product(s, s);
  REQUIRE(p.size() == 4);
  const auto& f = *p.find("f");
  for (Elem x1 = 0; x1 < 2; ++x1)
    for (Elem y1 = 0; y1 < 2; ++y1)
      for (Elem x2 = 0; x2 < 2; ++x2)
        for (Elem y2 = 0; y2 < 2; ++y2) {
          CHECK(f({pair_element(x1, y1, 2), pair_element(x2, y2, 2)}) ==
                pair_element(std::min(x1, x2), std::min(y1, y2), 2));
        }
  CHECK(fx::no_edge_factor().size() == 6);
  const auto one = FiniteAlgebra("one", 1, {}, {OperationTable("f", 2, 1, {0}), OperationTable("g", 2, 1, {0})});
  CHECK(find_isomorphism(product(fx::no_edge(), one), fx::no_edge()).has_value());
  CHECK_THROWS_AS(product(fx::sl2(), fx::mj2()), Error);
}

TEST_CASE("quotients") {
  const FiniteAlgebra nms = fx::no_majority_symmetry();
  const Quotient q = quotient(nms, Congruence::from_blocks(4, {{0, 2}, {1, 3}}));
  REQUIRE(q.algebra.size() == 2);
  const auto& maj = *q.algebra.find("maj");
  const auto& mn = *q.algebra.find("min");
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) {
        const Elem m = (x == y || x == z) ? x : y;
        CHECK(maj({x, y, z}) == m);
        CHECK(mn({x, y, z}) == z);
      }
  CHECK_FALSE(is_set(q.algebra));
  CHECK(find_isomorphism(quotient(nms, Congruence::equality(4)).algebra, nms).has_value());
  CHECK(kind_of([&] { quotient(nms, Congruence::from_blocks(4, {{0, 1}, {2}, {3}})); }) == ErrorKind::NotACongruence);
}

TEST_CASE("restrict") {
  const FiniteAlgebra ne = fx::no_edge();
  const Subalgebra ac = restrict(ne, ElemSet{0, 2});
  CHECK(ac.embedding == std::vector<Elem>{0, 2});
  for (const auto& op : ac.algebra.operations()) {
    CHECK(op({0, 1}) == 1);
    CHECK(op({1, 0}) == 1);
  }
  CHECK(restrict(ne, ElemSet::full(3)).algebra.operations() == ne.operations());
  CHECK(kind_of([&] { restrict(ne, ElemSet{0, 1}); }) == ErrorKind::NotClosed);
}

TEST_CASE("is_set") {
  const FiniteAlgebra p("p", 2, {}, {OperationTable("f", 2, 2, {0, 0, 1, 1}), OperationTable("g", 3, 2, {0, 0, 0, 0, 1, 1, 1, 1})});
  CHECK(is_set(p));
  CHECK_FALSE(is_set(fx::sl2()));
}

TEST_CASE("make_similar adds first projections") {
  const auto v = make_similar({fx::sl2(), fx::mj2()});
  REQUIRE(v.size() == 2);
  const auto& m_on_sl2 = *v[0].find("m");
  CHECK(m_on_sl2.projection_index() == 0);
  CHECK(v[1].find("f")->projection_index() == 0);
  CHECK(v[0].operations().size() == v[1].operations().size());
  const FiniteAlgebra clash("c", 2, {}, {OperationTable("f", 3, 2, {0, 0, 0, 0, 1, 1, 1, 1})});
  CHECK(kind_of([&] { make_similar({fx::sl2(), clash}); }) == ErrorKind::SignatureMismatch);
}

TEST_CASE("isomorphism search") {
  const FiniteAlgebra s = fx::sl2();
  const FiniteAlgebra join("j", 2, {}, {OperationTable("f", 2, 2, {0, 1, 1, 1})});
  const auto iso = find_isomorphism(s, join);
  REQUIRE(iso);
  CHECK(*iso == std::vector<Elem>{1, 0});
  CHECK_FALSE(find_isomorphism(fx::no_edge(), fx::z3_affine()));
}
