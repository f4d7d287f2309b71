#include <doctest.h>

#include "idem/edges.hpp"
#include "idem/fixtures.hpp"
#include "idem/genclose.hpp"
#include "idem/synth.hpp"
#include "idem/thin.hpp"

using namespace idem;
namespace fx = idem::fixtures;

namespace {
const Term x2 = proj(0, 2), y2 = proj(1, 2);
const Term x3 = proj(0, 3), y3 = proj(1, 3), z3 = proj(2, 3);

bool is_sls(const FiniteAlgebra& a, const Term& f) {
  const OperationTable t = realize_table(f, a);
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      const Elem v = t({x, y});
      if (v != x && !(t({x, v}) == v && t({v, x}) == v)) return false;
    }
  return true;
}

std::size_t witness_index(const EdgeReport& r, EdgeType t) {
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (r.witnesses[i].label == t) return i;
  }
  FAIL("no witness");
  return 0;
}

bool has_arc(const ThinGraph& g, Elem a, Elem b, ThinKind k) {
  return std::any_of(g.arcs.begin(), g.arcs.end(), [&](const ThinEdge& e) { return e.a == a && e.b == b && e.kind == k; });
}
}  // namespace

TEST_CASE("synth_sls examples") {
  const FiniteAlgebra ne = fx::no_edge();
  const Term f = apply("f", {x2, y2});
  const SlsResult r = synth_sls(ne, f);
  CHECK(realize_table(r.term, ne).table() == ne.find("f")->table());
  CHECK(synth_sls(fx::mj2(), x2).term == x2);
  const FiniteAlgebra s = fx::sl2();
  CHECK(realize_table(synth_sls(s, f).term, s).table() == s.find("f")->table());
}

TEST_CASE("synth_sls makes a non-SLS operation SLS") {
  // f(0,1)=1, f(1,2)=2 but f(0,2)=0: chain 0 -> 1 -> 2 needs the shift.
  const FiniteAlgebra a("chain", 3, {},
                        {OperationTable("f", 2, 3, {0, 1, 0, 1, 1, 2, 0, 2, 2})});
  const Term f = apply("f", {x2, y2});
  const SlsResult r = synth_sls(a, f);
  CHECK(is_sls(a, r.term));
}

TEST_CASE("thin semilattice order") {
  const FiniteAlgebra ne = fx::no_edge();
  const auto order = thin_semilattice_order(ne, apply("f", {x2, y2}));
  CHECK(order == std::vector<std::pair<Elem, Elem>>{{0, 2}, {1, 2}});
}

TEST_CASE("minimal pairs") {
  CHECK(is_minimal_pair(fx::sl2(), 0, 1, ElemSet{1}));
  const FiniteAlgebra c = fx::no_edge_factor();
  const Elem x = pair_element(0, 0, 2), y = pair_element(1, 1, 2);
  const EdgeReport r = classify_pair(c, x, y);
  const std::size_t i = witness_index(r, EdgeType::Majority);
  bool brute = true;
  for (Elem y2 : r.block(i, y).elements()) brute = brute && sg(c, ElemSet{x, y2}).contains(y);
  CHECK(is_minimal_pair(c, r, i, x, y) == brute);
}

TEST_CASE("special thin majority edges") {
  const FiniteAlgebra mj = fx::mj2();
  const EdgeReport r = classify_pair(mj, 0, 1);
  const auto e = find_special_thin_majority(mj, r, witness_index(r, EdgeType::Majority));
  REQUIRE(e.size() == 2);
  CHECK(((e[0].a == 0 && e[0].b == 1) || (e[1].a == 0 && e[1].b == 1)));

  const FiniteAlgebra nms = fx::no_majority_symmetry();
  const EdgeReport rn = classify_pair(nms, 0, 1);
  const auto en = find_special_thin_majority(nms, rn, witness_index(rn, EdgeType::Majority));
  CHECK(std::any_of(en.begin(), en.end(), [](const ThinEdge& t) { return t.a == 0 && (t.b == 1 || t.b == 3); }));

  const FiniteAlgebra c = fx::no_edge_factor();
  const Elem x = pair_element(0, 0, 2), y = pair_element(1, 1, 2);
  const EdgeReport rc = classify_pair(c, x, y);
  const std::size_t i = witness_index(rc, EdgeType::Majority);
  const auto ec = find_special_thin_majority(c, rc, i);
  REQUIRE_FALSE(ec.empty());
  for (const ThinEdge& t : ec) {
    for (Elem d : t.b_block.elements()) CHECK(sg(c, ElemSet{t.a, d}).contains(t.b));
  }
}

TEST_CASE("thin affine edges") {
  const FiniteAlgebra z = fx::z3_affine();
  const Term h = apply("h", {x3, y3, z3});
  for (Elem b : {1, 2}) {
    const EdgeReport r = classify_pair(z, 0, b);
    const auto e = find_thin_affine(z, r, witness_index(r, EdgeType::Affine), h);
    CHECK(std::any_of(e.begin(), e.end(), [&](const ThinEdge& t) { return t.a == 0 && t.b == b; }));
  }
  const FiniteAlgebra zz = product(z, z);
  const Elem a = pair_element(0, 0, 3), b = pair_element(1, 1, 3);
  const EdgeReport r = classify_pair(zz, a, b);
  // Two points of Z3 x Z3 generate the line through them.
  CHECK(r.subalgebra == ElemSet{a, pair_element(1, 1, 3), pair_element(2, 2, 3)});
  bool seen = false;
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (r.witnesses[i].label != EdgeType::Affine) continue;
    seen = true;
    CHECK(!find_thin_affine(zz, r, i, h).empty());
    for (const ThinEdge& t : find_thin_affine(zz, r, i, h)) CHECK(eval(h, zz, {t.b, t.a, t.a}) == t.b);
  }
  CHECK(seen);
}

TEST_CASE("necessary conditions") {
  const DistinguishedOps zops{x2, x3, apply("h", {x3, y3, z3})};
  CHECK(check_thin_necessary(fx::z3_affine(), 0, 1, ThinKind::ThinAffine, zops));
  const DistinguishedOps mops{x2, apply("m", {x3, y3, z3}), x3};
  CHECK(check_thin_necessary(fx::mj2(), 0, 1, ThinKind::SpecialThinMajority, mops));
  const DistinguishedOps sops{apply("f", {x2, y2}), x3, x3};
  CHECK_FALSE(check_thin_necessary(fx::sl2(), 0, 1, ThinKind::ThinAffine, sops));
}

TEST_CASE("thin graphs") {
  const UniformOps ne = uniform_ops({fx::no_edge()});
  const ThinGraph g = thin_graph(ne.inventory.members[0], ne.ops);
  CHECK(g.arcs.size() == 2);
  CHECK(has_arc(g, 0, 2, ThinKind::ThinSemilattice));
  CHECK(has_arc(g, 1, 2, ThinKind::ThinSemilattice));

  const UniformOps z = uniform_ops({fx::z3_affine()});
  const ThinGraph gz = thin_graph(z.inventory.members[0], z.ops);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      if (a != b) CHECK(has_arc(gz, a, b, ThinKind::ThinAffine));

  const UniformOps n = uniform_ops({fx::no_majority_symmetry()});
  const ThinGraph gn = thin_graph(n.inventory.members[0], n.ops);
  for (Elem a : {0, 2}) {
    CHECK((has_arc(gn, a, 1, ThinKind::SpecialThinMajority) || has_arc(gn, a, 3, ThinKind::SpecialThinMajority)));
  }
  for (const ThinEdge& e : gn.arcs) CHECK(e.necessary == true);
}

TEST_CASE("binary witness") {
  const FiniteAlgebra ne = fx::no_edge();
  const auto t = binary_witness(ne, 0, 1, 2);
  REQUIRE(t);
  CHECK(eval(*t, ne, {0, 1}) == 2);
  CHECK_FALSE(binary_witness(fx::sl2(), 1, 1, 0));
}
