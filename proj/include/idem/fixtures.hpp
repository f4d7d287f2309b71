#pragma once

#include <string>
#include <vector>

#include "idem/algebra.hpp"

namespace idem::fixtures {

/// {a,b,c} with binary f, g: an almost-semilattice that is simple.
FiniteAlgebra no_edge();
/// no_edge() with a ternary m acting as the first projection.
FiniteAlgebra no_edge_prime();
/// ({0,1}, m majority) with binary f, g acting as first projections.
FiniteAlgebra majority_prime();
/// no_edge_prime() x majority_prime(); (x, y) encoded as 2x + y.
FiniteAlgebra no_edge_factor();
/// ({0,1,2,3}, maj, min) whose parity classes form a congruence.
FiniteAlgebra no_majority_symmetry();
/// ({0,1,2}, h = x - y + z mod 3).
FiniteAlgebra z3_affine();
/// ({0,1}, f = meet).
FiniteAlgebra sl2();
/// ({0,1}, m = majority).
FiniteAlgebra mj2();
/// One element, one binary operation f.
FiniteAlgebra trivial();

/// Names accepted by `by_name`, in a fixed order.
std::vector<std::string> names();
FiniteAlgebra by_name(const std::string& name);

}  // namespace idem::fixtures
