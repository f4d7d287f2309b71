// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "idem/checks.hpp"
#include "idem/congruence.hpp"
#include "idem/fixtures.hpp"
#include "idem/genclose.hpp"
#include "idem/synth.hpp"
#include "oracles.hpp"

using namespace idem;
namespace fx = idem::fixtures;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;
};

void absorb(Outcome& o, const SuiteResult& s) {
  for (const auto& f : s.failures) o.failures.push_back(s.name + ": " + f);
  o.ok = o.ok && s.ok();
}

std::vector<FiniteAlgebra> all_fixtures() {
  std::vector<FiniteAlgebra> out;
  for (const auto& n : fx::names()) out.push_back(fx::by_name(n));
  out.push_back(fx::trivial());
  return out;
}

Outcome example(SuiteResult s) {
  Outcome o;
  absorb(o, s);
  o.detail = std::to_string(s.checked) + " checks";
  return o;
}

Outcome connectedness() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& a : all_fixtures()) {
    const SuiteResult s = suite_connectedness(a);
    n += s.checked;
    absorb(o, s);
    if (!s.skipped.empty()) {
      o.ok = false;
      o.failures.push_back(a.name() + ": undecided subuniverses");
    }
  }
  o.detail = std::to_string(n) + " subuniverses";
  return o;
}

Outcome tolerances() {
  Outcome o;
  const SuiteResult s = suite_tolerance_classes(all_fixtures(), 200, kSeed);
  absorb(o, s);
  o.detail = "200 tolerances, " + std::to_string(s.checked) + " checks";
  return o;
}

Outcome edge_lemmas() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& a : all_fixtures()) {
    for (const SuiteResult& s : {suite_many_edges(a), suite_edge_subalgebra(a), suite_edge_factor(a)}) {
      n += s.checked;
      absorb(o, s);
    }
  }
  o.detail = std::to_string(n) + " checks";
  return o;
}

Outcome uniform() {
  Outcome o;
  const UniformOps u = uniform_ops({fx::sl2(), fx::mj2(), fx::z3_affine()});
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.ok = false;
      o.failures.push_back(what);
    }
  };
  need(u.inventory.semilattice.size() == 1 && u.inventory.majority.size() == 1 && u.inventory.affine.size() == 1,
       "expected one thick edge of each type");
  for (const auto& c : u.checks) need(c.ok, c.condition + " at " + c.where);
  // Direct evaluation on the members, independent of verify_uniform.
  const auto& m = u.inventory.members;
  const OperationTable fs = realize_table(u.ops.f, m[0]);
  need(fs({0, 1}) == fs({1, 0}) && fs({0, 1}) != 2, "f not semilattice on SL2");
  need(realize_table(u.ops.f, m[1]).projection_index() == 0, "f not first projection on MJ2");
  need(realize_table(u.ops.f, m[2]).projection_index() == 0, "f not first projection on Z3A");
  const OperationTable gm = realize_table(u.ops.g, m[1]);
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      need(gm({x, x, y}) == x && gm({x, y, x}) == x && gm({y, x, x}) == x, "g not majority on MJ2");
  need(realize_table(u.ops.h, m[1]).projection_index() == 0, "h not first projection on MJ2");
  const OperationTable hz = realize_table(u.ops.h, m[2]);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) need(hz({x, y, y}) == x && hz({y, y, x}) == x, "h not Mal'tsev on Z3A");
  o.detail = std::to_string(u.checks.size()) + " conditions";
  return o;
}

Outcome sls() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& a : all_fixtures()) {
    const SuiteResult s = suite_sls(uniform_ops({a}));
    n += s.checked;
    absorb(o, s);
  }
  o.detail = std::to_string(n) + " checks";
  return o;
}

Outcome thin() {
  Outcome o;
  std::size_t n = 0;
  auto run = [&](const std::vector<FiniteAlgebra>& k) {
    const UniformOps u = uniform_ops(k);
    for (const SuiteResult& s : {suite_thin_edges(u), suite_thin_constructions(u), suite_thin_thick_colors(u)}) {
      n += s.checked;
      absorb(o, s);
    }
  };
  for (const auto& a : all_fixtures()) run({a});
  run({fx::sl2(), fx::mj2(), fx::z3_affine()});
  run(all_fixtures());
  o.detail = std::to_string(n) + " checks";
  return o;
}

Outcome oracles() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t compared = 0, absent = 0, skipped = 0;
  std::vector<FiniteAlgebra> small;
  for (const auto& a : all_fixtures()) {
    if (a.size() <= 4) small.push_back(a);
  }
  for (int i = 0; i < 600; ++i) {
    const FiniteAlgebra a = i % 2 == 0 ? small[(i / 2) % small.size()]
                                       : oracle::random_algebra(rng, 2 + rng() % 3, (i / 2) % 3);
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
    const auto naive = oracle::naive_closure(a, q.generators, 400);
    if (!naive) {
      ++skipped;
      continue;
    }
    const SubpowerAnswer r = subpower_membership(q);
    ++compared;
    if (r.status == SubpowerAnswer::Status::Absent) ++absent;
    if ((r.status == SubpowerAnswer::Status::Found) != naive->contains(q.target)) {
      o.ok = false;
      o.failures.push_back("subpower query " + std::to_string(i) + " on " + a.name() + " disagrees");
    }
  }
  std::size_t algebras = 0, abelian = 0;
  for (int i = 0; i < 150; ++i) {
    const FiniteAlgebra a = oracle::random_algebra(rng, 2 + rng() % 2, i % 3);
    const bool fast = is_abelian(a);
    ++algebras;
    abelian += fast ? 1 : 0;
    if (fast != oracle::term_condition_arity3(a)) {
      o.ok = false;
      o.failures.push_back("is_abelian disagrees on random algebra " + std::to_string(i));
    }
  }
  if (compared < 200 || absent < 20) {
    o.ok = false;
    o.failures.push_back("too few comparable subpower queries");
  }
  o.detail = std::to_string(compared) + " subpower queries (" + std::to_string(absent) + " Absent, " +
             std::to_string(skipped) + " beyond the oracle bound), " + std::to_string(algebras) + " algebras (" +
             std::to_string(abelian) + " abelian)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double limit_seconds;  // 0 = no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "no-edge example", 1, [] { return example(suite_example_no_edge()); }},
      {2, "no-edge-factor example", 5, [] { return example(suite_example_no_edge_factor()); }},
      {3, "no-majority-symmetry example", 60, [] { return example(suite_example_no_majority_symmetry()); }},
      {4, "connectedness of every subuniverse", 0, connectedness},
      {5, "tolerance classes are subuniverses", 0, tolerances},
      {6, "many-edges, edge-subalgebra, edge-factor", 0, edge_lemmas},
      {7, "uniform operations on {SL2, MJ2, Z3A}", 30, uniform},
      {8, "SLS operation on every fixture", 0, sls},
      {9, "thin-edge suites", 60, thin},
      {10, "oracle cross-checks", 0, oracles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.failures.push_back("time limit exceeded");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << o.detail << ", "
              << timing;
    if (c.limit_seconds > 0) std::cout << " < " << c.limit_seconds << " s";
    std::cout << "]\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "    " << o.failures[i] << "\n";
    if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
    failed += o.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
