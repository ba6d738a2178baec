#include "richclub/characteristic.hpp"

#include <algorithm>

#include "richclub/degree_sequence.hpp"
#include "richclub/error.hpp"
#include "richclub/graph.hpp"

namespace richclub {

Characteristic::Characteristic(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto c : values_) {
    if (c > 1) throw DomainError("characteristic values must be 0 or 1");
    n1_ += c;
  }
}

Characteristic Characteristic::complement() const {
  std::vector<std::uint8_t> flipped(values_.size());
  std::transform(values_.begin(), values_.end(), flipped.begin(),
                 [](std::uint8_t c) { return static_cast<std::uint8_t>(1 - c); });
  return Characteristic(std::move(flipped));
}

Characteristic characteristic_from_threshold(const Graph& g, Count k) {
  std::vector<std::uint8_t> values(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) values[v] = g.degree(v) > k ? 1 : 0;
  return Characteristic(std::move(values));
}

Characteristic characteristic_top_n(const Graph& g, std::size_t n1, RankMode mode) {
  const std::size_t n = g.node_count();
  if (n1 > n)
    throw BoundsError("n1 = " + std::to_string(n1) + " exceeds node count " + std::to_string(n));

  std::vector<std::uint8_t> values(n, 0);
  if (mode == RankMode::highest) {
    auto ds = degree_sequence(g);
    for (std::size_t i = 0; i < n1; ++i) values[ds.origin(i)] = 1;
  } else {
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) < g.degree(b); });
    for (std::size_t i = 0; i < n1; ++i) values[order[i]] = 1;
  }
  return Characteristic(std::move(values));
}

DyadCounts count_dyads(const Graph& g, const Characteristic& c) {
  if (c.size() != g.node_count())
    throw DomainError("characteristic covers " + std::to_string(c.size()) + " nodes, graph has " +
                      std::to_string(g.node_count()));
  DyadCounts counts;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      switch (static_cast<int>(c[u]) + static_cast<int>(c[v])) {
        case 2: ++counts.m11; break;
        case 1: ++counts.m10; break;
        default: ++counts.m00; break;
      }
    }
  }
  return counts;
}

}  // namespace richclub
