#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "mhc/generators.hpp"
#include "mhc/graph_io.hpp"

using namespace mhc;
using namespace mhc::testing;

TEST_CASE("numeric graphs round-trip byte for byte") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = gen_random(15, 0.25, seed);
    const std::string text = emit_graph_string(g);
    const Graph back = parse_graph_string(text);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
    CHECK(emit_graph_string(back) == text);
  }
}

TEST_CASE("symbolic names intern in first-appearance order and survive") {
  const std::string text =
      "# the q1 fixture\n"
      "graph 6 7\n"
      "e u1 u2\n"
      "e u1 u5\n"
      "e u2 u3\n"
      "e u2 u5\n"
      "e u3 u4\n"
      "e u3 u5\n"
      "e u5 u6\n";
  const Graph g = parse_graph_string(text);
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 7);
  CHECK(g.vertex_name(0) == "u1");
  CHECK(g.vertex_name(2) == "u5");  // third distinct token
  CHECK(g.vertex_name(3) == "u3");

  const std::string out = emit_graph_string(g);
  const Graph back = parse_graph_string(out);
  CHECK(back.edges() == g.edges());
  for (int v = 0; v < 6; ++v) CHECK(back.vertex_name(v) == g.vertex_name(v));
}

TEST_CASE("labeled graphs carry labels through the round trip") {
  const Graph g = q1_labeled();
  const std::string text = emit_graph_string(g);
  const Graph back = parse_graph_string(text);
  REQUIRE(back.labeled());
  for (int v = 0; v < 6; ++v) {
    CHECK(back.label_text(back.label_id(v)) == g.label_text(g.label_id(v)));
  }
  CHECK(emit_graph_string(back) == text);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_graph_string("nonsense 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string("graph 2 1\n"), std::invalid_argument);  // missing edge
  CHECK_THROWS_AS(parse_graph_string("graph 2 0\ne 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string("graph 2 1\ne 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string("graph 2 1\ne 0 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string("graph 2 2\ne 0 1\ne 1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string("graph 2 1\nv 0 A\ne 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string("graph 2 1 labeled\nv 0 A\ne 0 1\n"),
                  std::invalid_argument);  // vertex 1 unlabeled
  CHECK_THROWS_AS(parse_graph_string("graph 1 1\ne a b\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_string(""), std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
  const Graph g = parse_graph_string(
      "# header comment\n"
      "graph 3 2   # trailing comment\n"
      "\n"
      "e 0 1\n"
      "# between records\n"
      "e 1 2\n");
  CHECK(g.num_edges() == 2);
}
