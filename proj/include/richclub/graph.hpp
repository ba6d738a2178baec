#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "richclub/types.hpp"

namespace richclub {

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Nodes are dense indices 0..N-1, each carrying a string label. Neighbor lists
/// are sorted ascending and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over `labels.size()` nodes. Throws EdgeError on a
  /// self-loop or on an edge listed twice (in either orientation).
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Same, with labels "0".."n-1".
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  /// Every edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
};

struct LoadOptions {
  bool allow_disconnected = false;
};

/// Reads a whitespace-separated edge list. Blank lines and lines starting
/// with '#' are skipped; node indices follow first appearance.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {});
Graph load_edge_list_file(const std::string& path, const LoadOptions& options = {});

/// Writes one "label label" line per edge in Graph::edges() order.
void write_edge_list(std::ostream& out, const Graph& g);

/// 2M / (N(N-1)). Throws UndefinedError when N < 2.
double density(const Graph& g);

}  // namespace richclub
