#include "m2tc/graph.hpp"

#include <algorithm>
#include <string>

#include "m2tc/errors.hpp"

namespace m2tc {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe, 0) {
  for (Vertex v : members) {
    if (v >= universe) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                         std::to_string(universe) + " vertices");
    }
    insert(v);
  }
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  s.count_ = universe;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }
  if (!bits_[v]) {
    bits_[v] = 1;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size() && bits_[v]) {
    bits_[v] = 0;
    --count_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InvalidInput("edge set contains a duplicate edge id");
  }
}

bool EdgeSet::contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

Digraph::Digraph(std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ >= kNoVertex) throw InvalidInput("too many vertices");
  for (const Edge& e : edges_) {
    if (e.from >= n_ || e.to >= n_) {
      throw InvalidInput("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                         ") references a vertex outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (e.from == e.to) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.from));
    }
  }
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw InvalidInput("parallel edge (" + std::to_string(it->from) + "," + std::to_string(it->to) +
                       ")");
  }
  build_adjacency();
}

Digraph::Digraph(Trusted, std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  build_adjacency();
}

void Digraph::build_adjacency() {
  out_offset_.assign(n_ + 1, 0);
  in_offset_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offset_[e.from + 1];
    ++in_offset_[e.to + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  out_ids_.resize(edges_.size());
  in_ids_.resize(edges_.size());
  std::vector<std::size_t> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_ids_[out_fill[edges_[i].from]++] = static_cast<EdgeId>(i);
    in_ids_[in_fill[edges_[i].to]++] = static_cast<EdgeId>(i);
  }
}

std::optional<EdgeId> Digraph::find_edge(Vertex from, Vertex to) const {
  if (from >= n_ || to >= n_) return std::nullopt;
  if (out_degree(from) <= in_degree(to)) {
    for (EdgeId e : out_edges(from)) {
      if (edges_[e].to == to) return e;
    }
  } else {
    for (EdgeId e : in_edges(to)) {
      if (edges_[e].from == from) return e;
    }
  }
  return std::nullopt;
}

Digraph Digraph::edge_subgraph(const EdgeSet& keep) const {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  for (EdgeId e : keep) {
    if (e >= edges_.size()) throw InvalidInput("edge id " + std::to_string(e) + " out of range");
    kept.push_back(edges_[e]);
  }
  return Digraph(Trusted{}, n_, std::move(kept));
}

Digraph Digraph::edge_subgraph(std::span<const char> keep_mask) const {
  if (keep_mask.size() != edges_.size()) throw InvalidInput("edge mask size mismatch");
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (keep_mask[i]) kept.push_back(edges_[i]);
  }
  return Digraph(Trusted{}, n_, std::move(kept));
}

Flowgraph::Flowgraph(Digraph graph, Vertex root) : graph_(std::move(graph)), root_(root) {
  if (root_ >= graph_.num_vertices()) {
    throw InvalidInput("flowgraph root " + std::to_string(root_) + " out of range");
  }
  auto seen = reachable(graph_, root_);
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      throw InvalidInput("vertex " + std::to_string(v) + " is unreachable from root " +
                         std::to_string(root_));
    }
  }
}

Digraph reverse(const Digraph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.num_edges());
  for (const Edge& e : g.edges()) flipped.push_back({e.to, e.from});
  return Digraph(g.num_vertices(), std::move(flipped));
}

std::vector<char> reachable(const Digraph& g, Vertex start, Vertex skip, bool backward) {
  std::vector<char> seen(g.num_vertices(), 0);
  if (start >= g.num_vertices() || start == skip) return seen;
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto adj = backward ? g.in_edges(v) : g.out_edges(v);
    for (EdgeId e : adj) {
      Vertex w = backward ? g.edge(e).from : g.edge(e).to;
      if (w != skip && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;  // vertex, next out-edge position
  std::vector<std::vector<Vertex>> comps;
  std::size_t counter = 0;

  for (Vertex s = 0; s < n; ++s) {
    if (index[s] != kUnvisited) continue;
    call.push_back({s, 0});
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto out = g.out_edges(v);
      if (pos < out.size()) {
        Vertex w = g.edge(out[pos++]).to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

namespace {

bool strongly_connected_from(const Digraph& g, Vertex start, Vertex skip) {
  const std::size_t expected = g.num_vertices() - (skip == kNoVertex ? 0 : 1);
  for (bool backward : {false, true}) {
    auto seen = reachable(g, start, skip, backward);
    if (static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1)) != expected) return false;
  }
  return true;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.num_vertices() == 0) return false;
  return strongly_connected_from(g, 0, kNoVertex);
}

bool is_strongly_connected_without(const Digraph& g, Vertex removed) {
  if (removed >= g.num_vertices()) return is_strongly_connected(g);
  if (g.num_vertices() < 2) return false;
  Vertex start = removed == 0 ? 1 : 0;
  return strongly_connected_from(g, start, removed);
}

}  // namespace m2tc
