#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "m2tc/graph.hpp"

namespace m2tc {

/// Which branch of the construction produced the subgraph.
enum class SparsifyCase {
  t_empty,    // T empty: minimal 2-edge-connected subgraph
  t_all,      // T = V: minimal 2-vertex-connected subgraph
  t_small,    // |T| in {1, 2}: per-terminal spanning trees of G - y and its reverse
  t_general,  // 2 < |T| < n: independent trees of G and G^R at a non-terminal pivot
};

std::string_view to_string(SparsifyCase c);

/// Branch taken for a terminal set of the given size on n vertices.
SparsifyCase classify_case(std::size_t num_vertices, std::size_t terminal_count);

struct PhaseCounts {
  std::size_t base_edges = 0;          // the minimal 2-edge/2-vertex subgraph
  std::size_t forward_tree_edges = 0;  // distinct edges from trees grown in G
  std::size_t reverse_tree_edges = 0;  // distinct edges from trees grown in G^R, re-oriented
  std::size_t tree_edges = 0;          // distinct edges over all trees
  std::size_t added_by_trees = 0;      // tree edges not already in the base subgraph
  std::size_t removed_by_prune = 0;
};

struct SparsifyResult {
  EdgeSet kept;
  SparsifyCase case_taken = SparsifyCase::t_empty;
  PhaseCounts phase_counts;
  bool pruned = false;
  std::size_t approx_size = 0;  // size before pruning
  bool bound_8n_ok = false;
  /// Per-phase size guarantees: base <= 4n; |T|(2n-4) tree edges for t_small;
  /// 2(n-1) tree edges per direction for t_general.
  bool phase_bounds_ok = false;
  /// Tree roots: one per terminal (ascending) for t_small, the single pivot
  /// for t_general, empty otherwise.
  std::vector<Vertex> pivots;
};

/// Throws NotTwoTConnected (with the specific reason) unless g is
/// 2-T-connected for t.
void require_2T_connected(const Digraph& g, const VertexSet& t);

/// Greedy single-pass deletion in edge order; the result is 2-edge-connected
/// and no single kept edge can be dropped. Throws InvalidInput unless g is
/// 2-edge-connected.
EdgeSet minimal_2edge_subgraph(const Digraph& g);

/// Same for 2-vertex-connectivity. Throws InvalidInput unless g is
/// 2-vertex-connected.
EdgeSet minimal_2vertex_subgraph(const Digraph& g);

/// 2-T-connected spanning subgraph with at most 8n edges. The result is
/// re-checked before returning; a failed check throws InvariantViolation.
SparsifyResult m2tc_approx(const Digraph& g, const VertexSet& t);

/// Deletes, in ascending edge order, every edge of `start` whose removal keeps
/// the subgraph 2-T-connected. The result is minimal 2-T-connected.
/// Throws InvalidInput if (V, start) is not 2-T-connected.
SparsifyResult m2tc_prune(const Digraph& g, const VertexSet& t, const EdgeSet& start);

/// Prunes the output of m2tc_approx, keeping its case and phase counts.
SparsifyResult m2tc_prune(const Digraph& g, const VertexSet& t, const SparsifyResult& approx);

}  // namespace m2tc
