#include <doctest.h>

#include "idem/checks.hpp"
#include "idem/fixtures.hpp"

using namespace idem;
namespace fx = idem::fixtures;

TEST_CASE("structural suites pass on every fixture") {
  for (const auto& n : fx::names()) {
    const FiniteAlgebra a = fx::by_name(n);
    for (const SuiteResult& s : {suite_connectedness(a), suite_edge_factor(a), suite_edge_subalgebra(a),
                                 suite_many_edges(a), suite_smoothness(a), suite_link_tolerance(a, 1),
                                 suite_round_trip(a)}) {
      CHECK_MESSAGE(s.ok(), s.name << ": " << (s.failures.empty() ? "" : s.failures.front()));
    }
  }
}

TEST_CASE("a failing suite reports counterexamples") {
  // Two projections: both pairs are unary edges, and the tolerance suite still holds.
  const FiniteAlgebra p("p", 2, {}, {OperationTable("f", 2, 2, {0, 0, 1, 1})});
  const auto c = class_suites({p});
  REQUIRE(c.size() == 1);
  CHECK_FALSE(c[0].ok());
  CHECK(c[0].failures.front().find("unary") != std::string::npos);
}

TEST_CASE("example suites") {
  CHECK(suite_example_no_edge().ok());
  CHECK(suite_example_no_edge_factor().ok());
}
