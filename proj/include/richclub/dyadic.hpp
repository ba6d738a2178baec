#pragma once

#include <cstddef>

#include "richclub/characteristic.hpp"
#include "richclub/rational.hpp"
#include "richclub/types.hpp"

namespace richclub {

class Graph;
class DegreeSequence;

/// Expected m11 and m10 when n1 labels are placed uniformly at random.
struct DyadExpectation {
  double expected_m11 = 0.0;
  double expected_m10 = 0.0;
};

struct ExactDyadExpectation {
  Rational expected_m11;
  Rational expected_m10;

  DyadExpectation to_double() const {
    return {expected_m11.to_double(), expected_m10.to_double()};
  }
};

/// C(n1,2)·δ and n1·n0·δ for a graph with N nodes and M edges, exactly.
/// Throws UndefinedError when N < 2 and BoundsError when n1 > N.
ExactDyadExpectation expected_dyads_exact(std::size_t node_count, Count edge_count,
                                          std::size_t n1);
ExactDyadExpectation expected_dyads_exact(const Graph& g, std::size_t n1);
DyadExpectation expected_dyads(const Graph& g, std::size_t n1);

/// m11 / expected m11. Throws UndefinedError when the expectation is zero.
double dyadicity(const DyadCounts& counts, const DyadExpectation& exp);
/// m10 / expected m10. Throws UndefinedError when the expectation is zero.
double heterophilicity(const DyadCounts& counts, const DyadExpectation& exp);

struct DyadBounds {
  Count ub_m11_basic = 0;
  Count ub_m10_basic = 0;
  Count ub_m11 = 0;
  Count ub_m10 = 0;
};

/// min(M, C(n1,2)).
Count ub_m11_basic(Count edge_count, std::size_t n1);
Count ub_m11_basic(const Graph& g, std::size_t n1);
/// min(M, n1·n0).
Count ub_m10_basic(std::size_t node_count, Count edge_count, std::size_t n1);
Count ub_m10_basic(const Graph& g, std::size_t n1);

/// Structural bound on m11 from the degree sequence:
/// min(M, C(n1,2), ceil(sum over the n1 largest degrees of min(d, n1-1) / 2)).
/// Throws BoundsError when n1 > N.
Count ub_m11(const DegreeSequence& ds, std::size_t n1);

/// Structural bound on m10 from the degree sequence:
/// min(M, n1·n0, sum over the n1 largest of min(d, n0), sum over the n0 largest of min(d, n1)).
/// Throws BoundsError when n1 > N.
Count ub_m10(const DegreeSequence& ds, std::size_t n1);

/// All four bounds, with M taken as half the degree sum.
DyadBounds dyad_bounds(const DegreeSequence& ds, std::size_t n1);

}  // namespace richclub
