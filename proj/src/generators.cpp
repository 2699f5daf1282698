#include "m2tc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "m2tc/connectivity.hpp"
#include "m2tc/errors.hpp"

namespace m2tc {
namespace {

using Rng = std::mt19937_64;

class EdgeBuilder {
 public:
  explicit EdgeBuilder(std::size_t n) : n_(n) {}

  bool add(Vertex u, Vertex v) {
    if (u == v || !present_.insert({u, v}).second) return false;
    edges_.push_back({u, v});
    return true;
  }
  bool has(Vertex u, Vertex v) const { return present_.count({u, v}) != 0; }
  std::size_t size() const { return edges_.size(); }
  Digraph build() && { return Digraph(n_, std::move(edges_)); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::set<std::pair<Vertex, Vertex>> present_;
};

std::vector<Vertex> permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Vertex draw(std::size_t n, Rng& rng) {
  return static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

void add_random_edges(EdgeBuilder& b, std::size_t n, std::size_t count, Rng& rng) {
  const std::size_t capacity = n * (n - 1);
  if (b.size() + count > capacity) {
    throw InvalidInput("cannot add " + std::to_string(count) + " extra edges: a simple digraph on " +
                       std::to_string(n) + " vertices has at most " + std::to_string(capacity));
  }
  std::size_t added = 0;
  while (added < count) {
    if (b.add(draw(n, rng), draw(n, rng))) ++added;
  }
}

void add_random_chords(EdgeBuilder& b, std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> free_pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!b.has(u, v) && !b.has(v, u)) free_pairs.push_back({u, v});
    }
  }
  if (count > free_pairs.size()) {
    throw InvalidInput("cannot add " + std::to_string(count) + " bidirected chords, only " +
                       std::to_string(free_pairs.size()) + " vertex pairs are free");
  }
  std::shuffle(free_pairs.begin(), free_pairs.end(), rng);
  for (std::size_t i = 0; i < count; ++i) {
    b.add(free_pairs[i].first, free_pairs[i].second);
    b.add(free_pairs[i].second, free_pairs[i].first);
  }
}

// Draws T from `eligible` (ascending). Returns nullopt if the mode cannot be
// satisfied from that pool.
std::optional<VertexSet> draw_terminals(const GenSpec& spec, const std::vector<Vertex>& eligible,
                                        Rng& rng) {
  VertexSet t(spec.n);
  switch (spec.t_mode) {
    case TMode::empty:
      break;
    case TMode::all:
      if (eligible.size() != spec.n) return std::nullopt;
      t = VertexSet::all(spec.n);
      break;
    case TMode::fixed_k: {
      if (spec.k > eligible.size()) return std::nullopt;
      std::vector<Vertex> pool = eligible;
      std::shuffle(pool.begin(), pool.end(), rng);
      for (std::size_t i = 0; i < spec.k; ++i) t.insert(pool[i]);
      break;
    }
    case TMode::random: {
      std::bernoulli_distribution coin(0.5);
      for (Vertex v : eligible) {
        if (coin(rng)) t.insert(v);
      }
      break;
    }
  }
  return t;
}

}  // namespace

std::string_view to_string(TMode mode) {
  switch (mode) {
    case TMode::empty:
      return "empty";
    case TMode::all:
      return "all";
    case TMode::fixed_k:
      return "fixed";
    case TMode::random:
      return "random";
  }
  return "unknown";
}

std::optional<TMode> parse_t_mode(std::string_view text, std::size_t* k) {
  if (text == "empty" || text == "none") return TMode::empty;
  if (text == "all") return TMode::all;
  if (text == "random") return TMode::random;
  if (text.starts_with("fixed:")) {
    std::size_t value = 0;
    auto digits = text.substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      return std::nullopt;
    }
    if (k) *k = value;
    return TMode::fixed_k;
  }
  return std::nullopt;
}

Instance generate_instance(const GenSpec& spec) {
  if (spec.n < 3) throw InvalidInput("generated instances need n >= 3");
  if (spec.t_mode == TMode::fixed_k && spec.k > spec.n) {
    throw InvalidInput("fixed terminal count exceeds n");
  }
  Rng rng(spec.seed);

  if (!spec.rejection) {
    EdgeBuilder b(spec.n);
    auto order = permutation(spec.n, rng);
    for (std::size_t i = 0; i < spec.n; ++i) {
      Vertex u = order[i], v = order[(i + 1) % spec.n];
      b.add(u, v);
      b.add(v, u);
    }
    if (spec.bidirected_chords) {
      add_random_chords(b, spec.n, spec.extra_edges, rng);
    } else {
      add_random_edges(b, spec.n, spec.extra_edges, rng);
    }
    std::vector<Vertex> everyone(spec.n);
    std::iota(everyone.begin(), everyone.end(), Vertex{0});
    auto t = draw_terminals(spec, everyone, rng);
    return {std::move(b).build(), std::move(*t)};
  }

  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    EdgeBuilder b(spec.n);
    for (int cycle = 0; cycle < 2; ++cycle) {
      auto order = permutation(spec.n, rng);
      for (std::size_t i = 0; i < spec.n; ++i) b.add(order[i], order[(i + 1) % spec.n]);
    }
    const std::size_t room = spec.n * (spec.n - 1) - b.size();
    if (spec.bidirected_chords) {
      add_random_chords(b, spec.n, std::min(spec.extra_edges, room / 2), rng);
    } else {
      add_random_edges(b, spec.n, std::min(spec.extra_edges, room), rng);
    }
    Digraph g = std::move(b).build();
    if (!is_2_edge_connected(g)) continue;
    VertexSet sap = strong_articulation_points(g);
    std::vector<Vertex> eligible;
    for (Vertex v = 0; v < spec.n; ++v) {
      if (!sap.contains(v)) eligible.push_back(v);
    }
    if (auto t = draw_terminals(spec, eligible, rng)) return {std::move(g), std::move(*t)};
  }
  throw InvalidInput("no feasible instance found for the requested spec");
}

Digraph random_strongly_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("need at least one vertex");
  Rng rng(seed);
  EdgeBuilder b(n);
  auto order = permutation(n, rng);
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) b.add(order[i], order[(i + 1) % n]);
  }
  add_random_edges(b, n, extra_edges, rng);
  return std::move(b).build();
}

}  // namespace m2tc
