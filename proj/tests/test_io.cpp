#include <doctest.h>

#include <string>

#include "m2tc/errors.hpp"
#include "m2tc/fixtures.hpp"
#include "m2tc/io.hpp"

using namespace m2tc;

namespace {

std::size_t error_line(const std::string& text, ParseOptions opts = {}) {
  try {
    parse_digraph(text, opts);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parse a directed triangle") {
  ParsedGraph p = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
  CHECK(p.graph.num_vertices() == 3);
  CHECK(p.graph.num_edges() == 3);
  CHECK(p.graph.edge(1) == Edge{1, 2});
  CHECK_FALSE(p.terminals);
}

TEST_CASE("comments, blank lines and the T line") {
  ParsedGraph p = parse_digraph("# header\n\n3 2\n# mid\n0 1\n1 0\nT: 2 0 2\n");
  REQUIRE(p.terminals);
  CHECK(p.terminals->members() == std::vector<Vertex>{0, 2});
}

TEST_CASE("one-based ids shift down") {
  ParsedGraph p = parse_digraph("3 2\n1 2\n3 1\nT: 1 3\n", {.one_based = true});
  CHECK(p.graph.edge(0) == Edge{0, 1});
  CHECK(p.graph.edge(1) == Edge{2, 0});
  CHECK(p.terminals->members() == std::vector<Vertex>{2});
  CHECK(error_line("3 1\n0 1\n", {.one_based = true}) == 2);
}

TEST_CASE("errors carry the offending line") {
  CHECK(error_line("3 1\n2 2\n") == 2);         // self-loop
  CHECK(error_line("3 2\n0 1\n0 1\n") == 3);    // duplicate
  CHECK(error_line("3 1\n0 3\n") == 2);         // out of range
  CHECK(error_line("# c\n3 1\n0 x\n") == 3);    // malformed
  CHECK(error_line("3 1\n0 1 2\n") == 2);       // trailing token
  CHECK(error_line("three 1\n") == 1);
  CHECK(error_line("3 1\n0 1\n1 2\n") == 3);    // too many edges
  CHECK(error_line("3 1\n0 1\nT: 2 0\n") == 3); // count mismatch
  CHECK(error_line("3 1\n0 1\nT: 1 0\n1 0\n") == 4);
  CHECK_THROWS_AS(parse_digraph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph(""), ParseError);
}

TEST_CASE("format and parse round trip") {
  Fixture fx = figure1_fixture();
  for (bool one_based : {false, true}) {
    std::string text = format_digraph(fx.graph, fx.terminals, one_based);
    ParsedGraph back = parse_digraph(text, {.one_based = one_based});
    CHECK(back.graph.edges() == fx.graph.edges());
    CHECK(*back.terminals == fx.terminals);
  }
  CHECK(format_digraph(Digraph(2, {{0, 1}})) == "2 1\n0 1\n");
}

TEST_CASE("figure fixture file shape") {
  Fixture fx = figure1_fixture();
  CHECK(fx.graph.num_vertices() == 13);
  CHECK(fx.graph.num_edges() == 31);
  CHECK(fx.terminals.members() == std::vector<Vertex>{kFigure1Terminal});
  CHECK(figure1_two_edge_subgraph().size() == 28);
  CHECK(figure1_optimal_subgraph().size() == 30);
}
