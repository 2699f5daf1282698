#include "m2tc/connectivity.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "m2tc/dominators.hpp"
#include "m2tc/errors.hpp"

namespace m2tc {
namespace {

// Both dominator trees from vertex 0; g must be strongly connected.
struct RootedTrees {
  DominatorTree forward;
  DominatorTree backward;

  explicit RootedTrees(const Digraph& g)
      : forward(0, immediate_dominators(g, 0)), backward(0, immediate_dominators(g, 0, true)) {}
};

// Edge (x, y) is the only way into y from the root iff x = idom(y) and every
// other edge entering y leaves a vertex that y dominates.
template <typename Sink>
void edge_dominators(const Digraph& g, const DominatorTree& dt, bool backward, Sink&& sink) {
  for (Vertex y = 0; y < g.num_vertices(); ++y) {
    if (y == dt.root()) continue;
    const Vertex d = dt.idom(y);
    EdgeId candidate = 0;
    bool found = false, only = true;
    for (EdgeId e : backward ? g.out_edges(y) : g.in_edges(y)) {
      Vertex x = backward ? g.edge(e).to : g.edge(e).from;
      if (x == d) {
        candidate = e;
        found = true;
      } else if (!dt.dominates(y, x)) {
        only = false;
        break;
      }
    }
    if (found && only) {
      if (!sink(candidate)) return;
    }
  }
}

bool has_strong_bridge(const Digraph& g, const RootedTrees& trees) {
  bool any = false;
  auto stop = [&](EdgeId) {
    any = true;
    return false;
  };
  edge_dominators(g, trees.forward, false, stop);
  if (!any) edge_dominators(g, trees.backward, true, stop);
  return any;
}

VertexSet sap_from_trees(const Digraph& g, const RootedTrees& trees) {
  VertexSet out = nontrivial_dominators(trees.forward);
  for (Vertex v : nontrivial_dominators(trees.backward).members()) out.insert(v);
  if (!is_strongly_connected_without(g, 0)) out.insert(0);
  return out;
}

void require_strongly_connected(const Digraph& g, const char* what) {
  if (!is_strongly_connected(g)) {
    throw InvalidInput(std::string(what) + " requires a strongly connected graph");
  }
}

void require_same_universe(const Digraph& g, const VertexSet& t) {
  if (t.universe() != g.num_vertices()) {
    throw InvalidInput("vertex set ranges over " + std::to_string(t.universe()) +
                       " vertices, graph has " + std::to_string(g.num_vertices()));
  }
}

}  // namespace

VertexSet strong_articulation_points(const Digraph& g) {
  if (g.num_vertices() < 3) throw InvalidInput("strong articulation points need at least 3 vertices");
  require_strongly_connected(g, "strong_articulation_points");
  return sap_from_trees(g, RootedTrees(g));
}

EdgeSet strong_bridges(const Digraph& g) {
  require_strongly_connected(g, "strong_bridges");
  RootedTrees trees(g);
  std::vector<char> is_bridge(g.num_edges(), 0);
  auto mark = [&](EdgeId e) {
    is_bridge[e] = 1;
    return true;
  };
  edge_dominators(g, trees.forward, false, mark);
  edge_dominators(g, trees.backward, true, mark);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (is_bridge[e]) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

bool is_2_edge_connected(const Digraph& g) {
  if (!is_strongly_connected(g)) return false;
  if (g.num_vertices() == 1) return true;
  return !has_strong_bridge(g, RootedTrees(g));
}

bool is_2_vertex_connected(const Digraph& g) {
  if (g.num_vertices() < 3 || !is_strongly_connected(g)) return false;
  return sap_from_trees(g, RootedTrees(g)).empty();
}

bool is_2T_connected(const Digraph& g, const VertexSet& t) {
  require_same_universe(g, t);
  if (g.num_vertices() < 3 || !is_strongly_connected(g)) return false;
  RootedTrees trees(g);
  if (has_strong_bridge(g, trees)) return false;
  if (t.empty()) return true;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == 0 || !t.contains(v)) continue;
    if (!trees.forward.children(v).empty() || !trees.backward.children(v).empty()) return false;
  }
  return !t.contains(0) || is_strongly_connected_without(g, 0);
}

ConnectivityReport connectivity_report(const Digraph& g, const VertexSet& t) {
  require_same_universe(g, t);
  ConnectivityReport report;
  report.sap = VertexSet(g.num_vertices());
  report.strongly_connected = is_strongly_connected(g);
  if (!report.strongly_connected) return report;
  RootedTrees trees(g);
  report.sap = sap_from_trees(g, trees);
  std::vector<EdgeId> bridges;
  edge_dominators(g, trees.forward, false, [&](EdgeId e) {
    bridges.push_back(e);
    return true;
  });
  edge_dominators(g, trees.backward, true, [&](EdgeId e) {
    bridges.push_back(e);
    return true;
  });
  std::sort(bridges.begin(), bridges.end());
  bridges.erase(std::unique(bridges.begin(), bridges.end()), bridges.end());
  report.strong_bridges = EdgeSet(std::move(bridges));
  report.two_edge = report.strong_bridges.empty();
  report.two_vertex = g.num_vertices() >= 3 && report.sap.empty();
  bool t_clear = true;
  for (Vertex v : t.members()) t_clear = t_clear && !report.sap.contains(v);
  report.two_t = report.two_edge && g.num_vertices() >= 3 && t_clear;
  return report;
}

VertexSet naive_sap_oracle(const Digraph& g) {
  require_strongly_connected(g, "naive_sap_oracle");
  VertexSet out(g.num_vertices());
  if (g.num_vertices() < 3) return out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!is_strongly_connected_without(g, v)) out.insert(v);
  }
  return out;
}

EdgeSet naive_bridge_oracle(const Digraph& g) {
  require_strongly_connected(g, "naive_bridge_oracle");
  std::vector<char> mask(g.num_edges(), 1);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    mask[e] = 0;
    if (!is_strongly_connected(g.edge_subgraph(mask))) ids.push_back(e);
    mask[e] = 1;
  }
  return EdgeSet(std::move(ids));
}

}  // namespace m2tc
