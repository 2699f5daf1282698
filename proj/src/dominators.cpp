#include "m2tc/dominators.hpp"

#include <algorithm>
#include <string>

#include "m2tc/errors.hpp"

namespace m2tc {

std::vector<Vertex> immediate_dominators(const Digraph& g, Vertex root, bool backward) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> idom(n, kNoVertex);
  if (root >= n) return idom;

  auto successors = [&](Vertex v) { return backward ? g.in_edges(v) : g.out_edges(v); };
  auto predecessors = [&](Vertex v) { return backward ? g.out_edges(v) : g.in_edges(v); };
  auto head = [&](EdgeId e) { return backward ? g.edge(e).from : g.edge(e).to; };
  auto tail = [&](EdgeId e) { return backward ? g.edge(e).to : g.edge(e).from; };

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> semi(n, kUnseen);  // preorder number until replaced by semidominator
  std::vector<Vertex> vertex;                 // preorder number -> vertex
  std::vector<Vertex> parent(n, kNoVertex), ancestor(n, kNoVertex), label(n);
  vertex.reserve(n);

  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  semi[root] = 0;
  vertex.push_back(root);
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto succ = successors(v);
    if (pos == succ.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = head(succ[pos++]);
    if (semi[w] == kUnseen) {
      parent[w] = v;
      semi[w] = vertex.size();
      vertex.push_back(w);
      stack.push_back({w, 0});
    }
  }
  for (Vertex v = 0; v < n; ++v) label[v] = v;

  std::vector<Vertex> chain;
  auto eval = [&](Vertex v) {
    if (ancestor[v] == kNoVertex) return v;
    chain.clear();
    for (Vertex x = v; ancestor[ancestor[x]] != kNoVertex; x = ancestor[x]) chain.push_back(x);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      Vertex x = *it;
      Vertex a = ancestor[x];
      if (semi[label[a]] < semi[label[x]]) label[x] = label[a];
      ancestor[x] = ancestor[a];
    }
    return label[v];
  };

  std::vector<std::vector<Vertex>> bucket(n);
  for (std::size_t i = vertex.size(); i-- > 1;) {
    Vertex w = vertex[i];
    for (EdgeId e : predecessors(w)) {
      Vertex v = tail(e);
      if (semi[v] == kUnseen) continue;
      Vertex u = eval(v);
      if (semi[u] < semi[w]) semi[w] = semi[u];
    }
    bucket[vertex[semi[w]]].push_back(w);
    Vertex p = parent[w];
    ancestor[w] = p;
    for (Vertex v : bucket[p]) {
      Vertex u = eval(v);
      idom[v] = semi[u] < semi[v] ? u : p;
    }
    bucket[p].clear();
  }
  for (std::size_t i = 1; i < vertex.size(); ++i) {
    Vertex w = vertex[i];
    if (idom[w] != vertex[semi[w]]) idom[w] = idom[idom[w]];
  }
  idom[root] = kNoVertex;
  return idom;
}

DominatorTree::DominatorTree(Vertex root, std::vector<Vertex> idom)
    : root_(root), idom_(std::move(idom)) {
  const std::size_t n = idom_.size();
  if (root_ >= n || idom_[root_] != kNoVertex) {
    throw InvalidInput("dominator tree root is invalid");
  }
  children_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if (v == root_) continue;
    if (idom_[v] >= n) {
      throw InvalidInput("vertex " + std::to_string(v) + " has no immediate dominator");
    }
    children_[idom_[v]].push_back(v);
  }
  depth_.assign(n, 0);
  pre_.assign(n, 0);
  post_.assign(n, 0);
  std::size_t clock = 0, visited = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root_, 0}};
  pre_[root_] = clock++;
  ++visited;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos == children_[v].size()) {
      post_[v] = clock++;
      stack.pop_back();
      continue;
    }
    Vertex c = children_[v][pos++];
    depth_[c] = depth_[v] + 1;
    pre_[c] = clock++;
    ++visited;
    stack.push_back({c, 0});
  }
  if (visited != n) throw InvalidInput("immediate dominators do not form a tree");
}

std::vector<Vertex> DominatorTree::dominators(Vertex y) const {
  std::vector<Vertex> out;
  for (Vertex x = y; x != kNoVertex; x = idom_[x]) out.push_back(x);
  return out;
}

DominatorTree dominator_tree(const Flowgraph& fg) {
  return DominatorTree(fg.root(), immediate_dominators(fg.graph(), fg.root()));
}

VertexSet nontrivial_dominators(const DominatorTree& dt) {
  VertexSet out(dt.num_vertices());
  for (Vertex v = 0; v < dt.num_vertices(); ++v) {
    if (v != dt.root() && !dt.children(v).empty()) out.insert(v);
  }
  return out;
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < parent.size(); ++v) {
    if (v != root) out.push_back({parent[v], v});
  }
  return out;
}

namespace {

// For an edge (x, y) the immediate dominator of y dominates x. Returns the
// child of idom(y) on the tree path down to x, or idom(y) itself when x is it.
Vertex sibling_ancestor(const DominatorTree& dt, Vertex x, Vertex y) {
  const Vertex c = dt.idom(y);
  if (x == c) return c;
  if (!dt.dominates(c, x)) {
    throw InvariantViolation("edge source " + std::to_string(x) + " is not dominated by idom(" +
                             std::to_string(y) + ")");
  }
  while (dt.idom(x) != c) x = dt.idom(x);
  return x;
}

// Orders the children of one dominator-tree node. The children, the edges
// from the parent and the derived edges between siblings form a flowgraph
// whose dominator tree is flat. The order is built left to right: at each
// step the next vertex must have an entering edge from the parent or from an
// already placed sibling, and must not dominate any unplaced sibling in the
// flowgraph rooted at the parent that uses only the parent's own edges and
// edges between unplaced siblings. Such a vertex exists as long as every
// unplaced sibling can be reached along two disjoint paths, one starting
// with a placed sibling or the parent and one starting with a direct edge
// from the parent; removing a vertex that dominates nothing keeps that true.
std::vector<Vertex> order_siblings(const std::vector<Vertex>& siblings,
                                   const std::vector<char>& direct,
                                   const std::vector<std::vector<Vertex>>& derived_in,
                                   const std::vector<std::vector<Vertex>>& derived_out,
                                   std::vector<std::size_t>& local) {
  const std::size_t k = siblings.size();
  for (std::size_t i = 0; i < k; ++i) local[siblings[i]] = i + 1;

  std::vector<char> remaining(k + 1, 1), low_side(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) low_side[i + 1] = direct[siblings[i]];

  std::vector<Vertex> order;
  order.reserve(k);
  std::vector<Edge> edges;
  std::vector<char> dominates_other(k + 1);
  for (std::size_t step = 0; step < k; ++step) {
    edges.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (!remaining[i + 1]) continue;
      Vertex v = siblings[i];
      if (direct[v]) edges.push_back({0, static_cast<Vertex>(i + 1)});
      for (Vertex u : derived_in[v]) {
        if (remaining[local[u]]) {
          edges.push_back({static_cast<Vertex>(local[u]), static_cast<Vertex>(i + 1)});
        }
      }
    }
    Digraph h(k + 1, edges);
    auto idom = immediate_dominators(h, 0);
    std::fill(dominates_other.begin(), dominates_other.end(), 0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (!remaining[i]) continue;
      if (idom[i] == kNoVertex) {
        throw InvariantViolation("sibling " + std::to_string(siblings[i - 1]) +
                                 " lost its second entry path while ordering siblings");
      }
      dominates_other[idom[i]] = 1;
    }
    std::size_t pick = 0;
    for (std::size_t i = 1; i <= k && pick == 0; ++i) {
      if (remaining[i] && low_side[i] && !dominates_other[i]) pick = i;
    }
    if (pick == 0) throw InvariantViolation("no sibling can be placed next in the low-high order");

    Vertex v = siblings[pick - 1];
    order.push_back(v);
    remaining[pick] = 0;
    for (Vertex y : derived_out[v]) low_side[local[y]] = 1;
  }
  return order;
}

}  // namespace

std::vector<Vertex> low_high_order(const Flowgraph& fg, const DominatorTree& dt) {
  const Digraph& g = fg.graph();
  const std::size_t n = g.num_vertices();
  const Vertex root = fg.root();

  // Derived graph: edge (x, y) becomes (x', y) with x' the sibling of y above
  // x; edges from idom(y) are kept as "direct", edges from below y vanish.
  std::vector<char> direct(n, 0);
  std::vector<std::vector<Vertex>> derived_in(n), derived_out(n);
  for (const Edge& e : g.edges()) {
    if (e.to == root) continue;
    Vertex x = sibling_ancestor(dt, e.from, e.to);
    if (x == dt.idom(e.to)) {
      direct[e.to] = 1;
    } else if (x != e.to) {
      derived_in[e.to].push_back(x);
      derived_out[x].push_back(e.to);
    }
  }
  for (auto* lists : {&derived_in, &derived_out}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  std::vector<std::vector<Vertex>> child_order(n);
  std::vector<std::size_t> local(n, 0);
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> siblings = dt.children(c);
    if (siblings.empty()) continue;
    std::sort(siblings.begin(), siblings.end());
    child_order[c] = order_siblings(siblings, direct, derived_in, derived_out, local);
  }

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  order.push_back(root);
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos == child_order[v].size()) {
      stack.pop_back();
      continue;
    }
    Vertex c = child_order[v][pos++];
    order.push_back(c);
    stack.push_back({c, 0});
  }
  return order;
}

IndependentTrees independent_spanning_trees(const Flowgraph& fg) {
  const Digraph& g = fg.graph();
  const std::size_t n = g.num_vertices();
  const Vertex root = fg.root();
  DominatorTree dt = dominator_tree(fg);
  std::vector<Vertex> order = low_high_order(fg, dt);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  IndependentTrees trees{{root, std::vector<Vertex>(n, kNoVertex)},
                         {root, std::vector<Vertex>(n, kNoVertex)}};
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    const Vertex d = dt.idom(v);
    if (g.find_edge(d, v)) {
      trees.first.parent[v] = trees.second.parent[v] = d;
      continue;
    }
    Vertex low = kNoVertex, high = kNoVertex;
    for (EdgeId e : g.in_edges(v)) {
      Vertex x = g.edge(e).from;
      Vertex s = sibling_ancestor(dt, x, v);
      if (s == v) continue;
      if (position[s] < position[v]) {
        low = std::min(low, x);
      } else {
        high = std::min(high, x);
      }
    }
    if (low == kNoVertex || high == kNoVertex) {
      throw InvariantViolation("low-high order gives vertex " + std::to_string(v) +
                               " no entering edge on both sides");
    }
    trees.first.parent[v] = low;
    trees.second.parent[v] = high;
  }

  if (!verify_independence(fg, trees.first, trees.second)) {
    throw InvariantViolation("constructed spanning trees are not independent");
  }
  return trees;
}

namespace {

void check_spanning_tree(const Flowgraph& fg, const SpanningTree& t, const char* name) {
  const Digraph& g = fg.graph();
  const std::size_t n = g.num_vertices();
  if (t.root != fg.root() || t.parent.size() != n || t.parent[t.root] != kNoVertex) {
    throw InvalidInput(std::string(name) + " is not rooted at the flowgraph root");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == t.root) continue;
    if (t.parent[v] >= n || !g.find_edge(t.parent[v], v)) {
      throw InvalidInput(std::string(name) + ": parent link of vertex " + std::to_string(v) +
                         " is not a graph edge");
    }
  }
  // 0 = unknown, 1 = on current walk, 2 = reaches the root
  std::vector<char> state(n, 0);
  state[t.root] = 2;
  std::vector<Vertex> walk;
  for (Vertex v = 0; v < n; ++v) {
    walk.clear();
    Vertex x = v;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = t.parent[x];
    }
    if (state[x] == 1) throw InvalidInput(std::string(name) + " contains a cycle");
    for (Vertex w : walk) state[w] = 2;
  }
}

}  // namespace

bool verify_independence(const Flowgraph& fg, const SpanningTree& t1, const SpanningTree& t2) {
  check_spanning_tree(fg, t1, "first tree");
  check_spanning_tree(fg, t2, "second tree");
  DominatorTree dt = dominator_tree(fg);
  const std::size_t n = fg.graph().num_vertices();
  std::vector<std::size_t> mark(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    const std::size_t stamp = x + 1;
    for (Vertex v = x; v != kNoVertex; v = t1.parent[v]) mark[v] = stamp;
    std::size_t common = 0;
    for (Vertex v = x; v != kNoVertex; v = t2.parent[v]) {
      if (mark[v] != stamp) continue;
      if (!dt.dominates(v, x)) return false;
      ++common;
    }
    if (common != dt.depth(x) + 1) return false;
  }
  return true;
}

}  // namespace m2tc
