#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "richclub/types.hpp"

namespace richclub {

class Graph;

enum class SwapResult { applied, rejected };

/// Mutable edge list with constant-time adjacency queries, used as the state
/// of the degree-preserving rewiring chain.
class WorkingGraph {
 public:
  explicit WorkingGraph(const Graph& g);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(NodeId u, NodeId v) const;

  /// Rewires edges i = (a,b) and j = (c,d) into (a,d),(c,b); with `flip`,
  /// edge j is read as (d,c) and the result is (a,c),(d,b). Rejected, with
  /// the graph untouched, when a self-loop or duplicate edge would appear.
  SwapResult try_swap(std::size_t i, std::size_t j, bool flip);

  /// Restores the edge set of `g`, which must have the same node count.
  void reset(const Graph& g);

  bool is_connected() const;
  Graph to_graph(const std::vector<std::string>& labels) const;

 private:
  void insert(NodeId u, NodeId v);
  void erase(NodeId u, NodeId v);
  static std::uint64_t key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  // Dense bit matrix for small graphs, hash set otherwise.
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> keys_;
};

/// One proposal of the double-edge swap: two distinct edges chosen uniformly
/// and one of the two pairings chosen uniformly. Throws DegenerateGraphError
/// when the graph has fewer than two edges.
SwapResult double_edge_swap(WorkingGraph& g, std::mt19937_64& rng);

struct RandomizeOptions {
  Count swaps_per_edge = 10;
  Count max_attempt_factor = 100;
};

struct RandomizeStats {
  Count attempts = 0;
  Count applied = 0;
};

/// Proposes swaps until swaps_per_edge·M succeed or max_attempt_factor·M
/// proposals were made. Throws DegenerateGraphError when M < 2.
RandomizeStats randomize_in_place(WorkingGraph& g, const RandomizeOptions& options,
                                  std::uint64_t seed);

/// Degree-preserving randomization of `g`; labels are kept.
Graph randomize(const Graph& g, const RandomizeOptions& options, std::uint64_t seed);

/// Seed for replicate `index` of a run keyed by `master` (splitmix64 finalizer chain).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace richclub
