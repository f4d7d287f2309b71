#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "idem/algebra.hpp"
#include "idem/synth.hpp"

namespace idem {

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  /// Parts that could not run (cap, size bound), stated explicitly.
  std::vector<std::string> skipped;
  bool ok() const { return failures.empty(); }
};

/// G(B) is connected for every subuniverse B.
SuiteResult suite_connectedness(const FiniteAlgebra& a, const Limits& limits = {});
/// Seeded tolerances generated by 1-3 random pairs on the given algebras
/// (round robin); every class is a subuniverse and the tolerance is compatible.
SuiteResult suite_tolerance_classes(const std::vector<FiniteAlgebra>& algebras, std::size_t count,
                                    std::uint64_t seed);
/// An edge of A/α lifts to every pair of representatives with the same type;
/// H(A/α) connected implies H(A) connected.
SuiteResult suite_edge_factor(const FiniteAlgebra& a, const Limits& limits = {});
/// Edge types agree in a subalgebra and in A; H(B)-connected implies H(A)-connected.
SuiteResult suite_edge_subalgebra(const FiniteAlgebra& a, const Limits& limits = {});
/// Every c in a/θ, d in b/θ is an edge of the type witnessed by θ.
SuiteResult suite_many_edges(const FiniteAlgebra& a, const Limits& limits = {});
SuiteResult suite_smoothness(const FiniteAlgebra& a, const Limits& limits = {});
/// Each link tolerance of a random subpower with full projections is a tolerance.
SuiteResult suite_link_tolerance(const FiniteAlgebra& a, std::uint64_t seed);

/// SLS on every member, f semilattice on every thick semilattice edge.
SuiteResult suite_sls(const UniformOps& u);
/// Uniform conditions, recomputed.
SuiteResult suite_uniform(const UniformOps& u);
/// Thick-to-thin corollaries and the necessary conditions on emitted thin edges.
SuiteResult suite_thin_edges(const UniformOps& u);
/// The combination constructions on every combination of thin edges of the class.
SuiteResult suite_thin_constructions(const UniformOps& u);
/// A thin edge of a type exists iff a thick edge of that type does.
SuiteResult suite_thin_thick_colors(const UniformOps& u);

/// Reduct invariants: terms re-evaluate, arity monotonicity, {semilattice,
/// majority}-connectivity kept at arity 3.
SuiteResult suite_reduct(const FiniteAlgebra& a, const Limits& limits = {});
SuiteResult suite_round_trip(const FiniteAlgebra& a);

/// The worked examples' claims.
SuiteResult suite_example_no_edge();
SuiteResult suite_example_no_edge_factor();
SuiteResult suite_example_no_majority_symmetry(std::size_t cap = 1'000'000);

/// Every per-algebra suite (structure, tolerances, edges, synthesis, thin edges, reduct).
std::vector<SuiteResult> algebra_suites(const FiniteAlgebra& a, std::uint64_t seed, const Limits& limits = {});
/// algebra_suites plus the example claims attached to the fixture.
std::vector<SuiteResult> fixture_suites(const std::string& fixture, std::uint64_t seed, const Limits& limits = {});
/// Class-level suites for several fixtures together.
std::vector<SuiteResult> class_suites(const std::vector<FiniteAlgebra>& algebras, const Limits& limits = {});

}  // namespace idem
