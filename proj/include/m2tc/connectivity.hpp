#pragma once

#include "m2tc/graph.hpp"

namespace m2tc {

struct ConnectivityReport {
  bool strongly_connected = false;
  VertexSet sap;           // empty unless strongly_connected
  EdgeSet strong_bridges;  // empty unless strongly_connected
  bool two_edge = false;
  bool two_vertex = false;
  bool two_t = false;
};

/// Vertices whose removal leaves g not strongly connected. Uses the
/// non-trivial dominators of g and of its reverse, both rooted at vertex 0,
/// plus a direct test of vertex 0. Throws InvalidInput unless g is strongly
/// connected with at least 3 vertices.
VertexSet strong_articulation_points(const Digraph& g);

/// Edges whose removal leaves g not strongly connected: the edge dominators
/// of g and of its reverse from vertex 0. Throws InvalidInput unless g is
/// strongly connected.
EdgeSet strong_bridges(const Digraph& g);

bool is_2_edge_connected(const Digraph& g);
/// False for fewer than 3 vertices.
bool is_2_vertex_connected(const Digraph& g);
/// 2-edge-connected, at least 3 vertices, and no member of `t` is a strong
/// articulation point. `t` must range over g's vertices.
bool is_2T_connected(const Digraph& g, const VertexSet& t);

ConnectivityReport connectivity_report(const Digraph& g, const VertexSet& t);

/// Definition-level references: delete each vertex / edge and re-test strong
/// connectivity. Quadratic; meant for validation.
VertexSet naive_sap_oracle(const Digraph& g);
EdgeSet naive_bridge_oracle(const Digraph& g);

}  // namespace m2tc
