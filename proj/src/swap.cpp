#include "richclub/swap.hpp"

#include <numeric>

#include "richclub/error.hpp"
#include "richclub/graph.hpp"

namespace richclub {

namespace {

constexpr std::size_t kDenseLimit = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL));
}

WorkingGraph::WorkingGraph(const Graph& g)
    : node_count_(g.node_count()), dense_(g.node_count() <= kDenseLimit) {
  if (dense_) bits_.assign((node_count_ * node_count_ + 63) / 64, 0);
  reset(g);
}

void WorkingGraph::reset(const Graph& g) {
  if (g.node_count() != node_count_) throw DomainError("reset with a different node count");
  if (dense_) {
    for (const Edge& e : edges_) erase(e.u, e.v);
  } else {
    keys_.clear();
    keys_.reserve(g.edge_count() * 2);
  }
  edges_ = g.edges();
  for (const Edge& e : edges_) insert(e.u, e.v);
}

bool WorkingGraph::has_edge(NodeId u, NodeId v) const {
  if (dense_) {
    if (u > v) std::swap(u, v);
    const std::size_t bit = std::size_t{u} * node_count_ + v;
    return (bits_[bit / 64] >> (bit % 64)) & 1U;
  }
  return keys_.contains(key(u, v));
}

void WorkingGraph::insert(NodeId u, NodeId v) {
  if (dense_) {
    if (u > v) std::swap(u, v);
    const std::size_t bit = std::size_t{u} * node_count_ + v;
    bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
  } else {
    keys_.insert(key(u, v));
  }
}

void WorkingGraph::erase(NodeId u, NodeId v) {
  if (dense_) {
    if (u > v) std::swap(u, v);
    const std::size_t bit = std::size_t{u} * node_count_ + v;
    bits_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
  } else {
    keys_.erase(key(u, v));
  }
}

SwapResult WorkingGraph::try_swap(std::size_t i, std::size_t j, bool flip) {
  const NodeId a = edges_[i].u;
  const NodeId b = edges_[i].v;
  NodeId c = edges_[j].u;
  NodeId d = edges_[j].v;
  if (flip) std::swap(c, d);
  if (a == d || c == b || has_edge(a, d) || has_edge(c, b)) return SwapResult::rejected;
  erase(a, b);
  erase(c, d);
  insert(a, d);
  insert(c, b);
  edges_[i] = {a, d};
  edges_[j] = {c, b};
  return SwapResult::applied;
}

bool WorkingGraph::is_connected() const {
  if (node_count_ <= 1) return true;
  std::vector<NodeId> parent(node_count_);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = node_count_;
  for (const Edge& e : edges_) {
    NodeId ru = find(e.u);
    NodeId rv = find(e.v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

Graph WorkingGraph::to_graph(const std::vector<std::string>& labels) const {
  return Graph::from_edges(labels, edges_);
}

SwapResult double_edge_swap(WorkingGraph& g, std::mt19937_64& rng) {
  const std::size_t m = g.edge_count();
  if (m < 2) throw DegenerateGraphError("double-edge swap needs at least two edges");
  std::size_t i = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
  std::size_t j = std::uniform_int_distribution<std::size_t>(0, m - 2)(rng);
  if (j >= i) ++j;
  const bool flip = (rng() >> 63) != 0;
  return g.try_swap(i, j, flip);
}

RandomizeStats randomize_in_place(WorkingGraph& g, const RandomizeOptions& options,
                                  std::uint64_t seed) {
  const Count m = g.edge_count();
  if (m < 2) throw DegenerateGraphError("randomization needs at least two edges, graph has " +
                                        std::to_string(m));
  std::mt19937_64 rng(seed);
  const Count target = options.swaps_per_edge * m;
  const Count max_attempts = options.max_attempt_factor * m;
  RandomizeStats stats;
  while (stats.applied < target && stats.attempts < max_attempts) {
    ++stats.attempts;
    if (double_edge_swap(g, rng) == SwapResult::applied) ++stats.applied;
  }
  return stats;
}

Graph randomize(const Graph& g, const RandomizeOptions& options, std::uint64_t seed) {
  WorkingGraph work(g);
  randomize_in_place(work, options, seed);
  return work.to_graph(g.labels());
}

}  // namespace richclub
