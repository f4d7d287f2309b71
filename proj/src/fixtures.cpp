#include "idem/fixtures.hpp"

#include <functional>

namespace idem::fixtures {

namespace {

OperationTable tabulate(const std::string& name, std::size_t arity, std::size_t n,
                        const std::function<Elem(const std::vector<Elem>&)>& f) {
  std::vector<Elem> table(checked_pow(n, arity));
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = f(tuple_at(i, arity, n));
  return OperationTable(name, arity, n, std::move(table));
}

Elem majority3(const std::vector<Elem>& t) { return t[1] == t[2] ? t[1] : t[0]; }

}  // namespace

FiniteAlgebra no_edge() {
  // a=0, b=1, c=2; rows are the first argument.
  OperationTable f("f", 2, 3, {0, 2, 2, 1, 1, 2, 2, 2, 2});
  OperationTable g("g", 2, 3, {0, 0, 2, 2, 1, 2, 2, 2, 2});
  return FiniteAlgebra("no-edge", 3, {"a", "b", "c"}, {f, g});
}

FiniteAlgebra no_edge_prime() {
  FiniteAlgebra a = no_edge();
  std::vector<OperationTable> ops = a.operations();
  ops.push_back(tabulate("m", 3, 3, [](const std::vector<Elem>& t) { return t[0]; }));
  return FiniteAlgebra("no-edge'", 3, a.labels(), std::move(ops));
}

FiniteAlgebra majority_prime() {
  auto first = [](const std::vector<Elem>& t) { return t[0]; };
  return FiniteAlgebra("mj2'", 2, {"0", "1"},
                       {tabulate("f", 2, 2, first), tabulate("g", 2, 2, first), tabulate("m", 3, 2, majority3)});
}

FiniteAlgebra no_edge_factor() { return product(no_edge_prime(), majority_prime()).renamed("no-edge-factor"); }

FiniteAlgebra no_majority_symmetry() {
  auto parity = [](Elem x) { return x % 2; };
  // Position of the coordinate whose block differs from the other two, or 3 if all agree.
  auto odd_one = [&](const std::vector<Elem>& t) -> std::size_t {
    if (parity(t[0]) == parity(t[1]) && parity(t[1]) == parity(t[2])) return 3;
    if (parity(t[1]) == parity(t[2])) return 0;
    if (parity(t[0]) == parity(t[2])) return 1;
    return 2;
  };
  OperationTable maj = tabulate("maj", 3, 4, [&](const std::vector<Elem>& t) -> Elem {
    switch (odd_one(t)) {
      case 0:
      case 1:
        return t[2];
      case 2:
        return (t[2] + 1) % 4;
      default:
        return t[0];
    }
  });
  OperationTable min = tabulate("min", 3, 4, [&](const std::vector<Elem>& t) -> Elem {
    switch (odd_one(t)) {
      case 0:
      case 1:
        return (t[2] + 2) % 4;
      case 2:
        return (t[1] + 3) % 4;
      default:
        return t[0] == t[1] ? t[2] : (t[1] == t[2] ? t[0] : t[1]);
    }
  });
  return FiniteAlgebra("no-majority-symmetry", 4, {}, {maj, min});
}

FiniteAlgebra z3_affine() {
  return FiniteAlgebra("z3-affine", 3, {},
                       {tabulate("h", 3, 3, [](const std::vector<Elem>& t) { return (t[0] + 3 - t[1] + t[2]) % 3; })});
}

FiniteAlgebra sl2() {
  return FiniteAlgebra("sl2", 2, {}, {tabulate("f", 2, 2, [](const std::vector<Elem>& t) { return t[0] & t[1]; })});
}

FiniteAlgebra mj2() { return FiniteAlgebra("mj2", 2, {}, {tabulate("m", 3, 2, majority3)}); }

FiniteAlgebra trivial() { return FiniteAlgebra("trivial", 1, {}, {OperationTable("f", 2, 1, {0})}); }

std::vector<std::string> names() {
  return {"no-edge", "no-edge-factor", "no-majority-symmetry", "z3-affine", "sl2", "mj2"};
}

FiniteAlgebra by_name(const std::string& name) {
  if (name == "no-edge") return no_edge();
  if (name == "no-edge-factor") return no_edge_factor();
  if (name == "no-majority-symmetry") return no_majority_symmetry();
  if (name == "z3-affine") return z3_affine();
  if (name == "sl2") return sl2();
  if (name == "mj2") return mj2();
  if (name == "trivial") return trivial();
  throw Error(ErrorKind::UnknownSymbol, "no fixture named '" + name + "'");
}

}  // namespace idem::fixtures
