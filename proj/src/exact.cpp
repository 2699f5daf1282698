#include "m2tc/exact.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "m2tc/connectivity.hpp"
#include "m2tc/sparsify.hpp"

namespace m2tc {
namespace {

struct BudgetExhausted {};

class SubsetSearch {
 public:
  SubsetSearch(const Digraph& g, const VertexSet& t, std::vector<EdgeId> order, std::uint64_t budget)
      : g_(g), t_(t), order_(std::move(order)), budget_(budget), chosen_(g.num_edges(), 0),
        in_now_(g.num_vertices(), 0), out_now_(g.num_vertices(), 0),
        in_left_(g.num_vertices()), out_left_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      in_left_[v] = g.in_degree(v);
      out_left_[v] = g.out_degree(v);
    }
  }

  bool try_size(std::size_t k) {
    target_ = k;
    return descend(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }

  EdgeSet solution() const {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < chosen_.size(); ++e) {
      if (chosen_[e]) ids.push_back(e);
    }
    return EdgeSet(std::move(ids));
  }

 private:
  bool descend(std::size_t pos, std::size_t count) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (count == target_) return feasible();
    if (order_.size() - pos < target_ - count) return false;

    const EdgeId e = order_[pos];
    const Edge& edge = g_.edge(e);

    chosen_[e] = 1;
    ++out_now_[edge.from];
    ++in_now_[edge.to];
    if (descend(pos + 1, count + 1)) return true;
    chosen_[e] = 0;
    --out_now_[edge.from];
    --in_now_[edge.to];

    if (out_left_[edge.from] > 2 && in_left_[edge.to] > 2) {
      --out_left_[edge.from];
      --in_left_[edge.to];
      bool found = descend(pos + 1, count);
      ++out_left_[edge.from];
      ++in_left_[edge.to];
      if (found) return true;
    }
    return false;
  }

  bool feasible() const {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (in_now_[v] < 2 || out_now_[v] < 2) return false;
    }
    Digraph h = g_.edge_subgraph(chosen_);
    return is_strongly_connected(h) && is_2T_connected(h, t_);
  }

  const Digraph& g_;
  const VertexSet& t_;
  std::vector<EdgeId> order_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t target_ = 0;
  std::vector<char> chosen_;
  std::vector<std::size_t> in_now_, out_now_;    // degree among chosen edges
  std::vector<std::size_t> in_left_, out_left_;  // chosen plus undecided
};

}  // namespace

std::size_t lower_bound(const Digraph& g, const VertexSet&) { return 2 * g.num_vertices(); }

ExactResult m2tc_exact(const Digraph& g, const VertexSet& t, const ExactOptions& options) {
  require_2T_connected(g, t);

  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  if (options.shuffle_seed != 0) {
    std::mt19937_64 rng(options.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  ExactResult result;
  result.lower_bound_used = lower_bound(g, t);
  SubsetSearch search(g, t, std::move(order), options.budget);
  try {
    for (std::size_t k = result.lower_bound_used; k <= g.num_edges(); ++k) {
      if (search.try_size(k)) {
        result.status = ExactStatus::solved;
        result.optimum = search.solution();
        result.opt_size = k;
        break;
      }
    }
  } catch (const BudgetExhausted&) {
    result.status = ExactStatus::inconclusive;
  }
  result.nodes_explored = std::min(search.nodes(), options.budget);
  return result;
}

}  // namespace m2tc
