#include "m2tc/fixtures.hpp"

#include <vector>

#include "m2tc/errors.hpp"
#include "m2tc/io.hpp"

namespace m2tc {
namespace {

constexpr std::string_view kText = R"(# Small 2-T-connected example, T = {8}, 1-based ids.
13 31
6 10
2 6
4 10
10 13
10 4
3 5
5 3
10 3
3 10
8 11
11 8
11 7
7 11
2 1
1 2
12 13
13 12
8 1
1 8
8 9
9 8
8 5
5 8
12 9
9 12
7 6
6 7
6 4
4 6
2 13
13 2
T: 1 8
)";

// 1-based edges left out of each subgraph.
constexpr Edge kMissingFromTwoEdge[] = {{6, 10}, {2, 6}, {10, 13}};
constexpr Edge kMissingFromOptimal[] = {{6, 10}};

EdgeSet all_but(std::span<const Edge> missing) {
  const Digraph g = figure1_fixture().graph;
  std::vector<char> keep(g.num_edges(), 1);
  for (const Edge& e : missing) {
    auto id = g.find_edge(e.from - 1, e.to - 1);
    if (!id) throw InvariantViolation("fixture edge missing");
    keep[*id] = 0;
  }
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < keep.size(); ++e) {
    if (keep[e]) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

}  // namespace

std::string_view figure1_text() { return kText; }

Fixture figure1_fixture() {
  ParsedGraph parsed = parse_digraph(kText, ParseOptions{.one_based = true});
  return {std::move(parsed.graph), std::move(*parsed.terminals)};
}

EdgeSet figure1_two_edge_subgraph() { return all_but(kMissingFromTwoEdge); }

EdgeSet figure1_optimal_subgraph() { return all_but(kMissingFromOptimal); }

}  // namespace m2tc
