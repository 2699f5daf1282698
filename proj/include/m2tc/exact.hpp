#pragma once

#include <cstddef>
#include <cstdint>

#include "m2tc/graph.hpp"

namespace m2tc {

struct ExactOptions {
  /// Maximum number of search nodes before giving up.
  std::uint64_t budget = 50'000'000;
  /// Nonzero: visit edges in a seeded random order instead of ascending ids.
  std::uint64_t shuffle_seed = 0;
};

enum class ExactStatus { solved, inconclusive };

struct ExactResult {
  ExactStatus status = ExactStatus::inconclusive;
  EdgeSet optimum;  // empty when inconclusive
  std::size_t opt_size = 0;
  std::uint64_t nodes_explored = 0;
  std::size_t lower_bound_used = 0;
};

/// Every 2-T-connected spanning subgraph has in-degree >= 2 everywhere, so at
/// least 2n edges.
std::size_t lower_bound(const Digraph& g, const VertexSet& t);

/// Minimum-cardinality 2-T-connected spanning subgraph by exhaustive search
/// over subset sizes 2n, 2n+1, ...; the first feasible size is optimal.
/// Branches that would leave a vertex with fewer than two possible entering or
/// leaving edges are cut. Intended for n <= 7 and roughly 20 edges. Throws
/// NotTwoTConnected if g itself is infeasible.
ExactResult m2tc_exact(const Digraph& g, const VertexSet& t, const ExactOptions& options = {});

}  // namespace m2tc
