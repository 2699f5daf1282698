#pragma once

#include <utility>
#include <vector>

#include "m2tc/graph.hpp"

namespace m2tc {

/// Immediate dominators of every vertex reachable from `root` (Lengauer-Tarjan,
/// simple linking with path compression). Entries for the root and for
/// unreachable vertices are kNoVertex. With `backward` set the graph is read
/// with every edge reversed.
std::vector<Vertex> immediate_dominators(const Digraph& g, Vertex root, bool backward = false);

/// Dominator tree of a flowgraph. Ancestor queries are O(1) via pre/post
/// numbering of the tree.
class DominatorTree {
 public:
  /// `idom[v]` must be kNoVertex exactly for the root.
  DominatorTree(Vertex root, std::vector<Vertex> idom);

  Vertex root() const { return root_; }
  std::size_t num_vertices() const { return idom_.size(); }
  Vertex idom(Vertex v) const { return idom_[v]; }
  const std::vector<Vertex>& idoms() const { return idom_; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  std::size_t depth(Vertex v) const { return depth_[v]; }

  /// x dominates y (x == y counts).
  bool dominates(Vertex x, Vertex y) const { return pre_[x] <= pre_[y] && post_[y] <= post_[x]; }

  /// All dominators of y, from y up to the root.
  std::vector<Vertex> dominators(Vertex y) const;

 private:
  Vertex root_;
  std::vector<Vertex> idom_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> pre_;
  std::vector<std::size_t> post_;
};

DominatorTree dominator_tree(const Flowgraph& fg);

/// Vertices other than the root that dominate some vertex besides themselves,
/// i.e. the internal non-root nodes of the tree.
VertexSet nontrivial_dominators(const DominatorTree& dt);

/// Parent-pointer tree rooted at `root`; parent[root] == kNoVertex.
struct SpanningTree {
  Vertex root = kNoVertex;
  std::vector<Vertex> parent;

  /// (parent(v), v) for every non-root v, ascending v.
  std::vector<Edge> edges() const;
};

struct IndependentTrees {
  SpanningTree first;
  SpanningTree second;
};

/// Preorder of the dominator tree in which every vertex v != root has either
/// the edge (idom(v), v) or two entering edges (u, v), (w, v) with
/// u < v < w in the order and w not dominated by v.
std::vector<Vertex> low_high_order(const Flowgraph& fg, const DominatorTree& dt);

/// Two spanning trees rooted at fg.root() whose root-to-x paths meet exactly
/// in the dominators of x. The result is checked with verify_independence
/// before it is returned; a failed check throws InvariantViolation.
IndependentTrees independent_spanning_trees(const Flowgraph& fg);

/// Throws InvalidInput if either tree is not a spanning tree of fg rooted at
/// fg.root() built from graph edges.
bool verify_independence(const Flowgraph& fg, const SpanningTree& t1, const SpanningTree& t2);

}  // namespace m2tc
