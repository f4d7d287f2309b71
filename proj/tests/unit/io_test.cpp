#include <doctest.h>

#include <filesystem>
#include <random>

#include "../oracles.hpp"
#include "idem/fixtures.hpp"
#include "idem/io.hpp"

using namespace idem;
namespace fx = idem::fixtures;

TEST_CASE("serialize then parse is the identity") {
  for (const auto& n : fx::names()) {
    const AlgebraDescription d = fx::by_name(n).describe();
    CHECK(parse_algebra_text(serialize_algebra(d)) == d);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const AlgebraDescription d = oracle::random_algebra(rng, 2 + rng() % 3, i % 3).describe();
    const AlgebraDescription back = parse_algebra_text(serialize_algebra(d));
    CHECK(back == d);
    CHECK(serialize_algebra(back) == serialize_algebra(d));
  }
}

TEST_CASE("parser accepts comments and free line breaks") {
  const auto d = parse_algebra_text("# x\nalgebra s\nsize 2   # two\nop f 2\n0 0\n0\n1\nend\n");
  CHECK(d.size == 2);
  CHECK(d.operations.at(0).table == std::vector<Elem>{0, 0, 0, 1});
  CHECK(validate_algebra(d).operations() == fx::sl2().operations());
}

TEST_CASE("parser errors carry the line") {
  auto message = [](const std::string& text) {
    try {
      parse_algebra_text(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("algebra a\nsize 2\nop f 2\n0 0 0\nend\n").find("line 5") != std::string::npos);
  CHECK(message("algebra a\nsize 2\nop f 2\n0 0 0 x\nend\n").find("line 4") != std::string::npos);
  CHECK(message("algebra a\nsize 2\nop p1 2\n0 0 0 1\nend\n").find("reserved") != std::string::npos);
  CHECK(message("algebra a\nsize 2\nop f 2\n0 0 0 1\n").find("missing 'end'") != std::string::npos);
  CHECK(message("size 2\n").find("line 1") != std::string::npos);
  CHECK(message("algebra a\nsize 2\nop f 2\n0 0 0 2\nend\n").find("outside") != std::string::npos);
}

TEST_CASE("atomic write replaces the file") {
  const auto path = std::filesystem::temp_directory_path() / "idem_io_test.txt";
  write_file_atomic(path.string(), "one");
  write_file_atomic(path.string(), "two");
  CHECK(read_file(path.string()) == "two");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("DOT styles") {
  const FiniteAlgebra z = fx::z3_affine();
  const std::string dot = graph_dot(structure_graph(z), z.name());
  CHECK(dot.find("graph") == 0);
  std::size_t dotted = 0;
  for (std::size_t p = dot.find("style=dotted"); p != std::string::npos; p = dot.find("style=dotted", p + 1)) ++dotted;
  CHECK(dotted == 3);
  CHECK(dot.find("solid") == std::string::npos);
  const std::string ne = graph_dot(structure_graph(fx::no_edge()), "ne");
  CHECK(ne.find("\"a\" -- \"c\" [style=solid") != std::string::npos);
  CHECK(hypergraph_dot(hypergraph(fx::no_edge()), "ne").find("shape=point") != std::string::npos);
}
