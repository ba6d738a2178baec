#include "richclub/dyadic.hpp"

#include <algorithm>

#include "richclub/degree_sequence.hpp"
#include "richclub/error.hpp"
#include "richclub/graph.hpp"

namespace richclub {

namespace {

using u128 = UInt128;

void check_n1(std::size_t node_count, std::size_t n1) {
  if (n1 > node_count)
    throw BoundsError("n1 = " + std::to_string(n1) + " exceeds node count " +
                      std::to_string(node_count));
}

}  // namespace

ExactDyadExpectation expected_dyads_exact(std::size_t node_count, Count edge_count,
                                          std::size_t n1) {
  if (node_count < 2) throw UndefinedError("density is undefined for fewer than two nodes");
  check_n1(node_count, n1);
  const u128 n = node_count;
  const u128 pairs2 = n * (n - 1);  // twice the number of node pairs
  const u128 ones = n1;
  const u128 zeros = node_count - n1;
  // C(n1,2)·2M/(N(N-1)) and n1·n0·2M/(N(N-1))
  return {Rational::make(ones * (ones == 0 ? 0 : ones - 1) * edge_count, pairs2),
          Rational::make(2 * ones * zeros * edge_count, pairs2)};
}

ExactDyadExpectation expected_dyads_exact(const Graph& g, std::size_t n1) {
  return expected_dyads_exact(g.node_count(), g.edge_count(), n1);
}

DyadExpectation expected_dyads(const Graph& g, std::size_t n1) {
  return expected_dyads_exact(g, n1).to_double();
}

double dyadicity(const DyadCounts& counts, const DyadExpectation& exp) {
  if (!(exp.expected_m11 > 0.0))
    throw UndefinedError("dyadicity is undefined: expected m11 is zero");
  return static_cast<double>(counts.m11) / exp.expected_m11;
}

double heterophilicity(const DyadCounts& counts, const DyadExpectation& exp) {
  if (!(exp.expected_m10 > 0.0))
    throw UndefinedError("heterophilicity is undefined: expected m10 is zero");
  return static_cast<double>(counts.m10) / exp.expected_m10;
}

Count ub_m11_basic(Count edge_count, std::size_t n1) { return std::min(edge_count, choose2(n1)); }

Count ub_m11_basic(const Graph& g, std::size_t n1) {
  check_n1(g.node_count(), n1);
  return ub_m11_basic(g.edge_count(), n1);
}

Count ub_m10_basic(std::size_t node_count, Count edge_count, std::size_t n1) {
  check_n1(node_count, n1);
  return std::min<Count>(edge_count, Count{n1} * (node_count - n1));
}

Count ub_m10_basic(const Graph& g, std::size_t n1) {
  return ub_m10_basic(g.node_count(), g.edge_count(), n1);
}

Count ub_m11(const DegreeSequence& ds, std::size_t n1) {
  check_n1(ds.size(), n1);
  if (n1 < 2) return 0;
  const Count cap = n1 - 1;
  Count sum = 0;
  for (std::size_t i = 0; i < n1; ++i) sum += std::min(ds[i], cap);
  // Ceiling of the half-sum, in integers.
  const Count densest = (sum + 1) / 2;
  return std::min({ds.edge_count(), choose2(n1), densest});
}

Count ub_m10(const DegreeSequence& ds, std::size_t n1) {
  check_n1(ds.size(), n1);
  const std::size_t n0 = ds.size() - n1;
  if (n1 == 0 || n0 == 0) return 0;
  Count from_ones = 0;
  for (std::size_t i = 0; i < n1; ++i) from_ones += std::min<Count>(ds[i], n0);
  Count from_zeros = 0;
  for (std::size_t i = 0; i < n0; ++i) from_zeros += std::min<Count>(ds[i], n1);
  return std::min({ds.edge_count(), Count{n1} * n0, std::min(from_ones, from_zeros)});
}

DyadBounds dyad_bounds(const DegreeSequence& ds, std::size_t n1) {
  return {ub_m11_basic(ds.edge_count(), n1), ub_m10_basic(ds.size(), ds.edge_count(), n1),
          ub_m11(ds, n1), ub_m10(ds, n1)};
}

}  // namespace richclub
