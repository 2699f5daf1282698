#include "m2tc/sparsify.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "m2tc/connectivity.hpp"
#include "m2tc/dominators.hpp"
#include "m2tc/errors.hpp"

namespace m2tc {
namespace {

// Greedy deletion over the edges of `start` in ascending order. `keeps`
// decides whether the candidate subgraph still has the property. Edges whose
// tail has out-degree 2 or head has in-degree 2 are never removable: every
// property used here forces minimum in- and out-degree 2.
template <typename Property>
EdgeSet greedy_minimal(const Digraph& g, const EdgeSet& start, Property&& keeps) {
  const Digraph sub = g.edge_subgraph(start);
  std::vector<char> alive(sub.num_edges(), 1);
  std::vector<std::size_t> out_deg(sub.num_vertices()), in_deg(sub.num_vertices());
  for (Vertex v = 0; v < sub.num_vertices(); ++v) {
    out_deg[v] = sub.out_degree(v);
    in_deg[v] = sub.in_degree(v);
  }
  for (EdgeId e = 0; e < sub.num_edges(); ++e) {
    const Edge& edge = sub.edge(e);
    if (out_deg[edge.from] <= 2 || in_deg[edge.to] <= 2) continue;
    alive[e] = 0;
    if (keeps(sub.edge_subgraph(alive))) {
      --out_deg[edge.from];
      --in_deg[edge.to];
    } else {
      alive[e] = 1;
    }
  }
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < sub.num_edges(); ++e) {
    if (alive[e]) kept.push_back(start.ids()[e]);
  }
  return EdgeSet(std::move(kept));
}

EdgeSet all_edges(const Digraph& g) {
  std::vector<EdgeId> ids(g.num_edges());
  for (EdgeId e = 0; e < ids.size(); ++e) ids[e] = e;
  return EdgeSet(std::move(ids));
}

// Edge ids of a BFS tree of g - removed rooted at root; `backward` grows the
// tree along reversed edges, which yields the re-oriented edges of a tree of
// the reverse graph.
std::vector<EdgeId> bfs_tree_edges(const Digraph& g, Vertex root, Vertex removed, bool backward) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<EdgeId> tree;
  std::queue<Vertex> queue;
  seen[root] = 1;
  queue.push(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (EdgeId e : backward ? g.in_edges(v) : g.out_edges(v)) {
      Vertex w = backward ? g.edge(e).from : g.edge(e).to;
      if (w == removed || seen[w]) continue;
      seen[w] = 1;
      tree.push_back(e);
      queue.push(w);
    }
  }
  if (tree.size() + 2 != g.num_vertices()) {
    throw InvariantViolation("graph minus vertex " + std::to_string(removed) +
                             " is not strongly connected");
  }
  return tree;
}

EdgeId edge_id(const Digraph& g, Vertex from, Vertex to) {
  auto e = g.find_edge(from, to);
  if (!e) {
    throw InvariantViolation("tree edge (" + std::to_string(from) + "," + std::to_string(to) +
                             ") is not in the graph");
  }
  return *e;
}

std::size_t count_distinct(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

bool phase_bounds_hold(const SparsifyResult& r, std::size_t n, std::size_t t_size) {
  const PhaseCounts& pc = r.phase_counts;
  if (pc.base_edges > 4 * n) return false;
  switch (r.case_taken) {
    case SparsifyCase::t_small:
      return pc.tree_edges <= 2 * t_size * (n - 2);
    case SparsifyCase::t_general:
      return pc.forward_tree_edges <= 2 * (n - 1) && pc.reverse_tree_edges <= 2 * (n - 1) &&
             pc.tree_edges <= 4 * (n - 1);
    default:
      return true;
  }
}

}  // namespace

std::string_view to_string(SparsifyCase c) {
  switch (c) {
    case SparsifyCase::t_empty:
      return "T_empty";
    case SparsifyCase::t_all:
      return "T_all";
    case SparsifyCase::t_small:
      return "T_small";
    case SparsifyCase::t_general:
      return "T_general";
  }
  return "unknown";
}

SparsifyCase classify_case(std::size_t num_vertices, std::size_t terminal_count) {
  if (terminal_count == 0) return SparsifyCase::t_empty;
  if (terminal_count == num_vertices) return SparsifyCase::t_all;
  if (terminal_count <= 2) return SparsifyCase::t_small;
  return SparsifyCase::t_general;
}

void require_2T_connected(const Digraph& g, const VertexSet& t) {
  using Reason = NotTwoTConnected::Reason;
  if (t.universe() != g.num_vertices()) {
    throw InvalidInput("terminal set does not match the graph's vertex count");
  }
  if (g.num_vertices() < 3) {
    throw NotTwoTConnected(Reason::too_small, "2-T-connectivity needs at least 3 vertices");
  }
  if (!is_2_edge_connected(g)) {
    throw NotTwoTConnected(Reason::not_two_edge_connected, "graph is not 2-edge-connected");
  }
  VertexSet sap = strong_articulation_points(g);
  for (Vertex v : t.members()) {
    if (sap.contains(v)) {
      throw NotTwoTConnected(Reason::terminal_is_articulation_point,
                             "terminal " + std::to_string(v) + " is a strong articulation point");
    }
  }
}

EdgeSet minimal_2edge_subgraph(const Digraph& g) {
  if (!is_2_edge_connected(g)) throw InvalidInput("graph is not 2-edge-connected");
  return greedy_minimal(g, all_edges(g), [](const Digraph& h) { return is_2_edge_connected(h); });
}

EdgeSet minimal_2vertex_subgraph(const Digraph& g) {
  if (!is_2_vertex_connected(g)) throw InvalidInput("graph is not 2-vertex-connected");
  return greedy_minimal(g, all_edges(g),
                        [](const Digraph& h) { return is_2_vertex_connected(h); });
}

SparsifyResult m2tc_approx(const Digraph& g, const VertexSet& t) {
  require_2T_connected(g, t);
  const std::size_t n = g.num_vertices();

  SparsifyResult result;
  result.case_taken = classify_case(n, t.size());
  EdgeSet base = result.case_taken == SparsifyCase::t_all ? minimal_2vertex_subgraph(g)
                                                           : minimal_2edge_subgraph(g);
  result.phase_counts.base_edges = base.size();

  std::vector<EdgeId> forward, backward;
  if (result.case_taken == SparsifyCase::t_small) {
    for (Vertex y : t.members()) {
      const Vertex q = y == 0 ? 1 : 0;
      result.pivots.push_back(q);
      auto f = bfs_tree_edges(g, q, y, false);
      auto b = bfs_tree_edges(g, q, y, true);
      forward.insert(forward.end(), f.begin(), f.end());
      backward.insert(backward.end(), b.begin(), b.end());
    }
  } else if (result.case_taken == SparsifyCase::t_general) {
    Vertex w = 0;
    while (t.contains(w)) ++w;
    result.pivots.push_back(w);
    IndependentTrees fwd = independent_spanning_trees(Flowgraph(g, w));
    for (const SpanningTree* tree : {&fwd.first, &fwd.second}) {
      for (const Edge& e : tree->edges()) forward.push_back(edge_id(g, e.from, e.to));
    }
    IndependentTrees rev = independent_spanning_trees(Flowgraph(reverse(g), w));
    for (const SpanningTree* tree : {&rev.first, &rev.second}) {
      for (const Edge& e : tree->edges()) backward.push_back(edge_id(g, e.to, e.from));
    }
  }

  // Tree edges accumulate on top of the base subgraph; the base must stay in
  // for the result to remain 2-edge-connected.
  std::vector<EdgeId> trees = forward;
  trees.insert(trees.end(), backward.begin(), backward.end());
  result.phase_counts.forward_tree_edges = count_distinct(forward);
  result.phase_counts.reverse_tree_edges = count_distinct(backward);
  result.phase_counts.tree_edges = count_distinct(trees);

  std::vector<EdgeId> kept = base.ids();
  for (EdgeId e : trees) {
    if (!base.contains(e)) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  result.phase_counts.added_by_trees = kept.size() - base.size();
  result.kept = EdgeSet(std::move(kept));
  result.approx_size = result.kept.size();
  result.bound_8n_ok = result.kept.size() <= 8 * n;
  result.phase_bounds_ok = phase_bounds_hold(result, n, t.size());

  if (!is_2T_connected(g.edge_subgraph(result.kept), t)) {
    throw InvariantViolation(std::string("subgraph from case ") +
                             std::string(to_string(result.case_taken)) + " is not 2-T-connected");
  }
  return result;
}

SparsifyResult m2tc_prune(const Digraph& g, const VertexSet& t, const EdgeSet& start) {
  SparsifyResult seed;
  seed.case_taken = classify_case(g.num_vertices(), t.size());
  seed.kept = start;
  seed.approx_size = start.size();
  seed.bound_8n_ok = start.size() <= 8 * g.num_vertices();
  seed.phase_bounds_ok = true;
  return m2tc_prune(g, t, seed);
}

SparsifyResult m2tc_prune(const Digraph& g, const VertexSet& t, const SparsifyResult& approx) {
  if (t.universe() != g.num_vertices()) {
    throw InvalidInput("terminal set does not match the graph's vertex count");
  }
  for (EdgeId e : approx.kept) {
    if (e >= g.num_edges()) throw InvalidInput("edge id " + std::to_string(e) + " out of range");
  }
  if (!is_2T_connected(g.edge_subgraph(approx.kept), t)) {
    throw InvalidInput("starting edge set is not 2-T-connected");
  }
  SparsifyResult result = approx;
  result.kept = greedy_minimal(g, approx.kept,
                               [&](const Digraph& h) { return is_2T_connected(h, t); });
  result.pruned = true;
  result.phase_counts.removed_by_prune = approx.kept.size() - result.kept.size();
  result.bound_8n_ok = result.kept.size() <= 8 * g.num_vertices();
  return result;
}

}  // namespace m2tc
