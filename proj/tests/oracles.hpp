// Definition-level reference implementations used only by the tests. None of
// them calls into the library's algorithms; they share nothing but Digraph.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "m2tc/graph.hpp"

namespace oracle {

using m2tc::Digraph;
using m2tc::Edge;
using m2tc::EdgeId;
using m2tc::Vertex;

inline constexpr Vertex kNone = m2tc::kNoVertex;
inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

// Plain edge-list BFS; `cut_vertex`/`cut_edge` are ignored.
inline std::vector<char> reach(std::size_t n, const std::vector<Edge>& edges, Vertex start,
                               Vertex cut_vertex = kNone, std::size_t cut_edge = kNoEdge,
                               bool backward = false) {
  std::vector<char> seen(n, 0);
  if (start == cut_vertex) return seen;
  seen[start] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i == cut_edge) continue;
      Vertex a = backward ? edges[i].to : edges[i].from;
      Vertex b = backward ? edges[i].from : edges[i].to;
      if (seen[a] && !seen[b] && b != cut_vertex && a != cut_vertex) {
        seen[b] = 1;
        grew = true;
      }
    }
  }
  return seen;
}

inline bool strongly_connected(std::size_t n, const std::vector<Edge>& edges,
                               Vertex cut_vertex = kNone, std::size_t cut_edge = kNoEdge) {
  std::size_t alive = n - (cut_vertex == kNone ? 0 : 1);
  if (alive == 0) return false;
  Vertex start = 0;
  while (start == cut_vertex) ++start;
  for (bool backward : {false, true}) {
    auto seen = reach(n, edges, start, cut_vertex, cut_edge, backward);
    if (static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1)) != alive) return false;
  }
  return true;
}

inline std::vector<Vertex> saps(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!strongly_connected(n, edges, v)) out.push_back(v);
  }
  return out;
}

inline std::vector<EdgeId> bridges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!strongly_connected(n, edges, kNone, i)) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

inline bool two_t(std::size_t n, const std::vector<Edge>& edges, const std::vector<Vertex>& t) {
  if (n < 3 || !strongly_connected(n, edges)) return false;
  if (!bridges(n, edges).empty()) return false;
  for (Vertex v : t) {
    if (!strongly_connected(n, edges, v)) return false;
  }
  return true;
}

// dom[x][y]: x dominates y, i.e. y is unreachable from root once x is gone.
inline std::vector<std::vector<char>> dominance(std::size_t n, const std::vector<Edge>& edges,
                                                Vertex root) {
  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
  for (Vertex x = 0; x < n; ++x) {
    dom[x][x] = 1;
    if (x == root) {
      std::fill(dom[x].begin(), dom[x].end(), 1);
      continue;
    }
    auto seen = reach(n, edges, root, x);
    for (Vertex y = 0; y < n; ++y) {
      if (y != x && !seen[y]) dom[x][y] = 1;
    }
  }
  return dom;
}

// idom(y) is the strict dominator of y dominated by all other strict dominators.
inline std::vector<Vertex> idoms(std::size_t n, const std::vector<Edge>& edges, Vertex root) {
  auto dom = dominance(n, edges, root);
  std::vector<Vertex> idom(n, kNone);
  for (Vertex y = 0; y < n; ++y) {
    if (y == root) continue;
    for (Vertex x = 0; x < n; ++x) {
      if (x == y || !dom[x][y]) continue;
      bool closest = true;
      for (Vertex z = 0; z < n; ++z) {
        if (z != y && z != x && dom[z][y] && !dom[z][x]) closest = false;
      }
      if (closest) idom[y] = x;
    }
  }
  return idom;
}

inline std::vector<Vertex> nontrivial_dominators(std::size_t n, const std::vector<Edge>& edges,
                                                 Vertex root) {
  auto dom = dominance(n, edges, root);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    if (x == root) continue;
    for (Vertex y = 0; y < n; ++y) {
      if (y != x && y != root && dom[x][y]) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

// Every root-to-x tree path pair meets exactly in the dominators of x.
inline bool independent(std::size_t n, const std::vector<Edge>& edges, Vertex root,
                        const std::vector<Vertex>& p1, const std::vector<Vertex>& p2) {
  auto dom = dominance(n, edges, root);
  auto path = [&](const std::vector<Vertex>& parent, Vertex x) {
    std::vector<char> on(n, 0);
    for (std::size_t steps = 0; x != kNone && steps <= n; ++steps, x = parent[x]) on[x] = 1;
    return on;
  };
  for (Vertex x = 0; x < n; ++x) {
    auto a = path(p1, x), b = path(p2, x);
    for (Vertex v = 0; v < n; ++v) {
      if ((a[v] && b[v]) != static_cast<bool>(dom[v][x])) return false;
    }
  }
  return true;
}

// Smallest 2-T-connected edge subset by plain enumeration over bit masks.
inline std::optional<std::size_t> brute_force_minimum(std::size_t n, const std::vector<Edge>& edges,
                                                      const std::vector<Vertex>& t) {
  const std::size_t m = edges.size();
  if (m > 22) return std::nullopt;
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (best && size >= *best) continue;
    if (size < 2 * n) continue;
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) sub.push_back(edges[i]);
    }
    if (two_t(n, sub, t)) best = size;
  }
  return best;
}

// Largest extra-edge count the cycle-backbone generator accepts.
inline std::size_t backbone_room(std::size_t n, bool chords) {
  return chords ? n * (n - 1) / 2 - n : n * (n - 1) - 2 * n;
}

// Directed Hamiltonian cycle over a shuffled order plus `extra` random edges.
inline Digraph random_strong(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (u == v || has[u][v]) return false;
    has[u][v] = 1;
    edges.push_back({u, v});
    return true;
  };
  for (std::size_t i = 0; i < n && n > 1; ++i) add(order[i], order[(i + 1) % n]);
  extra = std::min(extra, n * (n - 1) - edges.size());
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t added = 0; added < extra;) {
    if (add(pick(rng), pick(rng))) ++added;
  }
  return Digraph(n, std::move(edges));
}

inline Digraph bidirected_cycle(std::size_t n) {
  std::vector<Edge> edges;
  if (n == 2) return Digraph(2, {{0, 1}, {1, 0}});
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = static_cast<Vertex>((v + 1) % n);
    edges.push_back({v, w});
    edges.push_back({w, v});
  }
  return Digraph(n, std::move(edges));
}

inline Digraph directed_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Digraph(n, std::move(edges));
}

inline Digraph complete_bidirected(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return Digraph(n, std::move(edges));
}

}  // namespace oracle
