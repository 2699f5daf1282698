#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace m2tc {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex from;
  Vertex to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Subset of the vertices 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
  /// Duplicate members collapse; a member >= universe throws InvalidInput.
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet all(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const { return v < bits_.size() && bits_[v] != 0; }
  void insert(Vertex v);
  void erase(Vertex v);

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<char> bits_;
  std::size_t count_ = 0;
};

/// Subset of a digraph's edges, held as sorted, unique edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  /// Sorts the ids. Duplicates throw InvalidInput.
  explicit EdgeSet(std::vector<EdgeId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId e) const;
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

/// Simple directed graph on vertices 0..n-1. Immutable once built; edges and
/// adjacency lists keep the insertion order of the input.
class Digraph {
 public:
  Digraph() = default;
  /// Throws InvalidInput on self-loops, parallel edges or out-of-range ids.
  Digraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_ids_.data() + out_offset_[v], out_ids_.data() + out_offset_[v + 1]};
  }
  std::span<const EdgeId> in_edges(Vertex v) const {
    return {in_ids_.data() + in_offset_[v], in_ids_.data() + in_offset_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return out_offset_[v + 1] - out_offset_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offset_[v + 1] - in_offset_[v]; }

  std::optional<EdgeId> find_edge(Vertex from, Vertex to) const;

  /// Spanning subgraph with only the edges in `keep`. Edge i of the result is
  /// keep.ids()[i].
  Digraph edge_subgraph(const EdgeSet& keep) const;
  /// Same, selecting by a per-edge mask (nonzero = keep), original order.
  Digraph edge_subgraph(std::span<const char> keep_mask) const;

 private:
  struct Trusted {};
  Digraph(Trusted, std::size_t num_vertices, std::vector<Edge> edges);
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offset_{0};
  std::vector<EdgeId> in_ids_;
};

/// A digraph together with a start vertex from which every vertex is
/// reachable.
class Flowgraph {
 public:
  /// Throws InvalidInput when root is out of range or some vertex cannot be
  /// reached from it.
  Flowgraph(Digraph graph, Vertex root);

  const Digraph& graph() const { return graph_; }
  Vertex root() const { return root_; }

 private:
  Digraph graph_;
  Vertex root_;
};

/// Edge i of the result is edge i of `g` turned around.
Digraph reverse(const Digraph& g);

/// Vertices reachable from `start` without entering `skip`. With `backward`
/// set, edges are followed against their direction.
std::vector<char> reachable(const Digraph& g, Vertex start, Vertex skip = kNoVertex,
                            bool backward = false);

/// Components ordered by their smallest vertex; members ascending.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// Whether g with vertex `removed` (and its edges) deleted is strongly
/// connected. A graph left with no vertices is not.
bool is_strongly_connected_without(const Digraph& g, Vertex removed);

}  // namespace m2tc
