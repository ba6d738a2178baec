#include "richclub/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "richclub/error.hpp"

namespace richclub {

namespace {

std::string edge_name(const std::vector<std::string>& labels, Edge e) {
  return "(" + labels[e.u] + ", " + labels[e.v] + ")";
}

}  // namespace

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  Graph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second)
      throw InputError("duplicate node label '" + g.labels_[v] + "'");
  }

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw EdgeError("self-loop on node " + g.labels_[e.u]);
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.neighbors_[fill[e.u]++] = e.v;
    g.neighbors_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw EdgeError("duplicate edge " +
                      edge_name(g.labels_, {static_cast<NodeId>(v), *dup}));
    }
  }
  return g;
}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::string> labels(node_count);
  for (std::size_t v = 0; v < node_count; ++v) labels[v] = std::to_string(v);
  return from_edges(std::move(labels), edges);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const std::size_t n = node_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> seen;  // edge key -> line

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError(line_no, "expected two node labels");
    if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    if (a == b) throw EdgeError("line " + std::to_string(line_no) + ": self-loop (" + a + ", " + a + ")");

    NodeId u = intern(a);
    NodeId v = intern(b);
    std::uint64_t key = u < v ? (std::uint64_t{u} << 32 | v) : (std::uint64_t{v} << 32 | u);
    auto [it, inserted] = seen.emplace(key, line_no);
    if (!inserted) {
      throw EdgeError("line " + std::to_string(line_no) + ": duplicate edge (" + a + ", " + b +
                      "), first seen on line " + std::to_string(it->second));
    }
    edges.push_back({u, v});
  }
  if (in.bad()) throw InputError("read error");

  Graph g = Graph::from_edges(std::move(labels), edges);
  if (!options.allow_disconnected && !g.is_connected())
    throw ConnectivityError("graph is not connected (pass allow_disconnected to accept it)");
  return g;
}

Graph load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return load_edge_list(in, options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

double density(const Graph& g) {
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) throw UndefinedError("density is undefined for fewer than two nodes");
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

}  // namespace richclub
