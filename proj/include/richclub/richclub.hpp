#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "richclub/types.hpp"

namespace richclub {

class Graph;

/// Coefficients of the club {i : degree(i) > k}. Undefined values are empty.
struct RichClubPoint {
  Count k = 0;
  std::size_t n1 = 0;
  std::size_t n0 = 0;
  Count m11 = 0;
  Count m10 = 0;
  Count m00 = 0;
  Count ub_m11 = 0;
  Count ub_m10 = 0;
  std::optional<double> phi;
  std::optional<double> phi_new;
  std::optional<double> phi_bar;
  std::optional<double> delta_k;
};

struct GraphSummary {
  std::size_t node_count = 0;
  Count edge_count = 0;
  Count max_degree = 0;
};

struct RichClubProfile {
  GraphSummary graph;
  std::vector<RichClubPoint> points;
};

/// 2·E_{>k} / (N_{>k}(N_{>k}-1)), with the club edges counted directly from
/// the adjacency. Empty when N_{>k} < 2.
std::optional<double> phi_direct(const Graph& g, Count k);

/// m11 / C(n1,2) via the threshold characteristic and dyad counts.
/// Agrees with phi_direct bit for bit.
std::optional<double> phi(const Graph& g, Count k);

/// m11 / ub_m11. Empty when ub_m11 = 0.
std::optional<double> phi_new(const Graph& g, Count k);

/// m10 / ub_m10. Empty when ub_m10 = 0.
std::optional<double> phi_bar(const Graph& g, Count k);

/// (phi_new - phi) / phi_new; 0 when both are 0; empty if either is undefined.
std::optional<double> delta_k(const Graph& g, Count k);

/// Same rule applied to precomputed coefficients.
std::optional<double> relative_gain(std::optional<double> phi, std::optional<double> phi_new);

RichClubPoint rich_club_point(const Graph& g, Count k);

/// Thresholds at which the club changes: 0 plus every distinct degree below the
/// maximum. Each distinct non-empty club is produced exactly once.
std::vector<Count> default_k_grid(const Graph& g);

/// Throws DomainError unless `grid` is strictly increasing within [0, max degree].
void validate_k_grid(const Graph& g, std::span<const Count> grid);

RichClubProfile profile(const Graph& g);
RichClubProfile profile(const Graph& g, std::span<const Count> k_grid);

}  // namespace richclub
