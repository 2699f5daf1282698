#include <doctest.h>

#include <random>

#include "m2tc/errors.hpp"
#include "m2tc/fixtures.hpp"
#include "m2tc/graph.hpp"
#include "m2tc/io.hpp"
#include "oracles.hpp"

using namespace m2tc;

namespace {

std::vector<std::pair<Vertex, Vertex>> sorted_pairs(const Digraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.push_back({e.from, e.to});
  std::sort(out.begin(), out.end());
  return out;
}

// Partition as a per-vertex component label normalised by first appearance.
std::vector<std::size_t> labels(const std::vector<std::vector<Vertex>>& comps, std::size_t n) {
  std::vector<std::size_t> label(n);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) label[v] = c;
  }
  return label;
}

}  // namespace

TEST_CASE("digraph construction rejects loops, parallel edges and bad ids") {
  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), InvalidInput);
  Digraph g(3, {{0, 1}, {1, 0}});
  CHECK(g.num_edges() == 2);
}

TEST_CASE("adjacency is the transpose and keeps insertion order") {
  std::mt19937_64 rng(7);
  Digraph g = oracle::random_strong(9, 15, rng);
  std::size_t out_total = 0, in_total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out_total += g.out_degree(v);
    in_total += g.in_degree(v);
    EdgeId prev = 0;
    bool first = true;
    for (EdgeId e : g.out_edges(v)) {
      CHECK(g.edge(e).from == v);
      if (!first) CHECK(e > prev);
      prev = e;
      first = false;
    }
    for (EdgeId e : g.in_edges(v)) CHECK(g.edge(e).to == v);
  }
  CHECK(out_total == g.num_edges());
  CHECK(in_total == g.num_edges());
  CHECK(g.find_edge(g.edge(3).from, g.edge(3).to) == EdgeId{3});
}

TEST_CASE("vertex and edge sets") {
  VertexSet s(5, std::vector<Vertex>{1, 3, 3});
  CHECK(s.size() == 2);
  CHECK(s.members() == std::vector<Vertex>{1, 3});
  CHECK_THROWS_AS(VertexSet(3, std::vector<Vertex>{3}), InvalidInput);
  CHECK(VertexSet::all(4).size() == 4);
  EdgeSet e({4, 1, 2});
  CHECK(e.ids() == std::vector<EdgeId>{1, 2, 4});
  CHECK(e.contains(2));
  CHECK_FALSE(e.contains(3));
  CHECK_THROWS_AS(EdgeSet({1, 1}), InvalidInput);
}

TEST_CASE("edge subgraph numbers edges by position in the kept set") {
  Digraph g = oracle::bidirected_cycle(4);
  Digraph h = g.edge_subgraph(EdgeSet({1, 5, 6}));
  REQUIRE(h.num_edges() == 3);
  CHECK(h.edge(0) == g.edge(1));
  CHECK(h.edge(2) == g.edge(6));
  CHECK(h.num_vertices() == 4);
}

TEST_CASE("reverse") {
  Digraph c3 = oracle::directed_cycle(3);
  Digraph r = reverse(c3);
  CHECK(r.find_edge(1, 0));
  CHECK(r.find_edge(2, 1));
  CHECK(r.find_edge(0, 2));
  CHECK_FALSE(r.find_edge(0, 1));
  Digraph tri = oracle::bidirected_cycle(3);
  CHECK(sorted_pairs(reverse(tri)) == sorted_pairs(tri));
  CHECK(strongly_connected_components(reverse(figure1_fixture().graph)).size() == 1);
}

TEST_CASE("reverse is an involution and preserves the SCC partition") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng() % 10;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && rng() % 4 == 0) edges.push_back({u, v});
      }
    }
    Digraph g(n, edges);
    CHECK(reverse(reverse(g)).edges() == g.edges());
    CHECK(labels(strongly_connected_components(g), n) ==
          labels(strongly_connected_components(reverse(g)), n));
    // Mutual reachability from the edge-list oracle.
    auto comps = labels(strongly_connected_components(g), n);
    for (Vertex u = 0; u < n; ++u) {
      auto fwd = oracle::reach(n, edges, u);
      auto bwd = oracle::reach(n, edges, u, oracle::kNone, oracle::kNoEdge, true);
      for (Vertex v = 0; v < n; ++v) CHECK((comps[u] == comps[v]) == (fwd[v] && bwd[v]));
    }
    CHECK(is_strongly_connected(g) == oracle::strongly_connected(n, edges));
  }
}

TEST_CASE("strongly connected components") {
  auto c = strongly_connected_components(oracle::directed_cycle(3));
  CHECK(c == std::vector<std::vector<Vertex>>{{0, 1, 2}});
  auto p = strongly_connected_components(Digraph(3, {{0, 1}, {1, 2}}));
  CHECK(p == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
  auto f = strongly_connected_components(figure1_fixture().graph);
  REQUIRE(f.size() == 1);
  CHECK(f[0].size() == 13);
}

TEST_CASE("is_strongly_connected") {
  CHECK(is_strongly_connected(oracle::directed_cycle(3)));
  CHECK_FALSE(is_strongly_connected(Digraph(3, {{0, 1}, {1, 0}})));
  CHECK_FALSE(is_strongly_connected(Digraph(0, {})));
  CHECK(is_strongly_connected(Digraph(1, {})));
  Fixture fx = figure1_fixture();
  CHECK(is_strongly_connected(fx.graph.edge_subgraph(figure1_two_edge_subgraph())));
  CHECK(is_strongly_connected_without(oracle::bidirected_cycle(4), 2));
  CHECK_FALSE(is_strongly_connected_without(oracle::directed_cycle(4), 2));
}

TEST_CASE("flowgraph requires reachability from the root") {
  CHECK_THROWS_AS(Flowgraph(Digraph(3, {{0, 1}}), 0), InvalidInput);
  CHECK_THROWS_AS(Flowgraph(oracle::directed_cycle(3), 3), InvalidInput);
  try {
    Flowgraph(Digraph(3, {{0, 1}, {1, 0}}), 0);
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
  }
}
