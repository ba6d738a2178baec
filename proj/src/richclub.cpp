#include "richclub/richclub.hpp"

#include <algorithm>

#include "richclub/characteristic.hpp"
#include "richclub/degree_sequence.hpp"
#include "richclub/dyadic.hpp"
#include "richclub/error.hpp"
#include "richclub/graph.hpp"

namespace richclub {

namespace {

std::optional<double> ratio(Count num, Count den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

RichClubPoint make_point(const Graph& g, const DegreeSequence& ds, Count k) {
  RichClubPoint p;
  p.k = k;
  auto c = characteristic_from_threshold(g, k);
  p.n1 = c.n1();
  p.n0 = c.n0();
  auto counts = count_dyads(g, c);
  p.m11 = counts.m11;
  p.m10 = counts.m10;
  p.m00 = counts.m00;
  // The club is exactly the head of the degree sequence of length n1.
  p.ub_m11 = ub_m11(ds, p.n1);
  p.ub_m10 = ub_m10(ds, p.n1);
  p.phi = ratio(p.m11, choose2(p.n1));
  p.phi_new = ratio(p.m11, p.ub_m11);
  p.phi_bar = ratio(p.m10, p.ub_m10);
  p.delta_k = relative_gain(p.phi, p.phi_new);
  return p;
}

}  // namespace

std::optional<double> phi_direct(const Graph& g, Count k) {
  Count club_nodes = 0;
  Count club_edges = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) <= k) continue;
    ++club_nodes;
    for (NodeId v : g.neighbors(u)) {
      if (u < v && g.degree(v) > k) ++club_edges;
    }
  }
  if (club_nodes < 2) return std::nullopt;
  return 2.0 * static_cast<double>(club_edges) /
         (static_cast<double>(club_nodes) * static_cast<double>(club_nodes - 1));
}

std::optional<double> phi(const Graph& g, Count k) {
  auto c = characteristic_from_threshold(g, k);
  return ratio(count_dyads(g, c).m11, choose2(c.n1()));
}

std::optional<double> phi_new(const Graph& g, Count k) {
  auto c = characteristic_from_threshold(g, k);
  return ratio(count_dyads(g, c).m11, ub_m11(degree_sequence(g), c.n1()));
}

std::optional<double> phi_bar(const Graph& g, Count k) {
  auto c = characteristic_from_threshold(g, k);
  return ratio(count_dyads(g, c).m10, ub_m10(degree_sequence(g), c.n1()));
}

std::optional<double> relative_gain(std::optional<double> phi, std::optional<double> phi_new) {
  if (!phi || !phi_new) return std::nullopt;
  if (*phi_new == 0.0) return 0.0;
  return (*phi_new - *phi) / *phi_new;
}

std::optional<double> delta_k(const Graph& g, Count k) {
  return relative_gain(phi(g, k), phi_new(g, k));
}

RichClubPoint rich_club_point(const Graph& g, Count k) {
  return make_point(g, degree_sequence(g), k);
}

std::vector<Count> default_k_grid(const Graph& g) {
  const Count max_degree = g.max_degree();
  std::vector<Count> grid{0};
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const Count d = g.degree(v);
    if (d > 0 && d < max_degree) grid.push_back(d);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

void validate_k_grid(const Graph& g, std::span<const Count> grid) {
  const Count max_degree = g.max_degree();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > max_degree)
      throw DomainError("k = " + std::to_string(grid[i]) + " exceeds the maximum degree " +
                        std::to_string(max_degree));
    if (i > 0 && grid[i] <= grid[i - 1])
      throw DomainError("k grid must be strictly increasing");
  }
}

RichClubProfile profile(const Graph& g) {
  auto grid = default_k_grid(g);
  return profile(g, grid);
}

RichClubProfile profile(const Graph& g, std::span<const Count> k_grid) {
  validate_k_grid(g, k_grid);
  RichClubProfile out;
  out.graph = {g.node_count(), g.edge_count(), g.max_degree()};
  auto ds = degree_sequence(g);
  out.points.reserve(k_grid.size());
  for (Count k : k_grid) out.points.push_back(make_point(g, ds, k));
  return out;
}

}  // namespace richclub
