#pragma once

#include <string_view>

#include "m2tc/graph.hpp"

namespace m2tc {

/// Terminal of the small worked example, vertex 8 in its 1-based labelling.
inline constexpr Vertex kFigure1Terminal = 7;

struct Fixture {
  Digraph graph;
  VertexSet terminals;
};

/// 13 vertices, 31 edges, T = {kFigure1Terminal}; ids are 0-based.
Fixture figure1_fixture();
/// 2-edge-connected 28-edge subgraph in which the terminal is a strong
/// articulation point. Edge ids refer to figure1_fixture().graph.
EdgeSet figure1_two_edge_subgraph();
/// 30-edge 2-T-connected subgraph. Edge ids refer to figure1_fixture().graph.
EdgeSet figure1_optimal_subgraph();

/// The fixture in the edge-list format with 1-based ids and its T line.
std::string_view figure1_text();

}  // namespace m2tc
