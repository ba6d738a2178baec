#pragma once

// Test-only brute-force oracles. Nothing here calls into the library's
// counting or bound code; graphs are plain adjacency bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "richclub/graph.hpp"

namespace oracle {

/// Small labeled graph on at most 16 nodes as adjacency bitmasks.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<std::pair<int, int>> edges;

  int degree(int v) const { return std::popcount(adj[v]); }

  bool connected() const {
    if (n <= 1) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1U) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (n == 32 ? ~0U : (1U << n) - 1);
  }

  /// Edges with both endpoints in `set`.
  int inside(std::uint32_t set) const {
    int twice = 0;
    for (int v = 0; v < n; ++v)
      if (set >> v & 1U) twice += std::popcount(adj[v] & set);
    return twice / 2;
  }

  /// Edges with exactly one endpoint in `set`.
  int across(std::uint32_t set) const {
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (set >> v & 1U) count += std::popcount(adj[v] & ~set);
    return count;
  }

  richclub::Graph to_graph() const {
    std::vector<richclub::Edge> list;
    for (auto [u, v] : edges) list.push_back({static_cast<richclub::NodeId>(u), static_cast<richclub::NodeId>(v)});
    return richclub::Graph::from_edges(static_cast<std::size_t>(n), list);
  }
};

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

/// Calls `fn` for each of the 2^C(n,2) labeled simple graphs on n nodes.
inline void for_each_graph(int n, const std::function<void(const MaskGraph&)>& fn) {
  const auto pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  MaskGraph g;
  g.n = n;
  for (std::uint64_t code = 0; code < total; ++code) {
    g.adj.assign(static_cast<std::size_t>(n), 0);
    g.edges.clear();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (code >> p & 1U) {
        auto [u, v] = pairs[p];
        g.adj[u] |= 1U << v;
        g.adj[v] |= 1U << u;
        g.edges.emplace_back(u, v);
      }
    }
    fn(g);
  }
}

/// Every non-increasing degree sequence realized by some simple graph on n nodes.
inline std::set<std::vector<int>> realizable_sequences(int n) {
  std::set<std::vector<int>> out;
  const auto pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (code >> p & 1U) {
        ++deg[pairs[p].first];
        ++deg[pairs[p].second];
      }
    }
    auto sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    out.insert(sorted);
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
