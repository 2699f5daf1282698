#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "m2tc/graph.hpp"

namespace m2tc {

enum class TMode { empty, all, fixed_k, random };

std::string_view to_string(TMode mode);
/// "empty", "all", "random", or "fixed:K" (K written into *k).
std::optional<TMode> parse_t_mode(std::string_view text, std::size_t* k = nullptr);

struct GenSpec {
  std::size_t n = 3;
  /// Random edges beyond the backbone. With bidirected_chords each one is an
  /// antiparallel pair, i.e. two edges.
  std::size_t extra_edges = 0;
  TMode t_mode = TMode::empty;
  std::size_t k = 0;  // used by TMode::fixed_k
  std::uint64_t seed = 0;
  bool bidirected_chords = false;
  /// Replace the bidirected-cycle backbone by two random directed Hamiltonian
  /// cycles plus extras, resampled until 2-edge-connected; T is then drawn
  /// from the vertices that are not strong articulation points.
  bool rejection = false;
};

struct Instance {
  Digraph graph;
  VertexSet terminals;
};

/// Deterministic for a fixed spec. The default backbone is a bidirected
/// Hamiltonian cycle over a seeded permutation, which is 2-vertex-connected,
/// so every terminal set is feasible. Throws InvalidInput when n < 3, the
/// extras do not fit in a simple digraph, or a rejection spec cannot be met.
Instance generate_instance(const GenSpec& spec);

/// Directed Hamiltonian cycle over a seeded permutation plus `extra_edges`
/// random edges: strongly connected, typically with articulation points and
/// bridges.
Digraph random_strongly_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

}  // namespace m2tc
