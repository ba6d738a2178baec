#include "richclub/degree_sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "richclub/error.hpp"
#include "richclub/graph.hpp"

namespace richclub {

DegreeSequence::DegreeSequence(std::vector<Count> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

Count DegreeSequence::sum() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), Count{0});
}

DegreeSequence DegreeSequence::head(std::size_t n) const {
  if (n > size())
    throw BoundsError("head length " + std::to_string(n) + " exceeds sequence length " +
                      std::to_string(size()));
  DegreeSequence out;
  out.degrees_.assign(degrees_.begin(), degrees_.begin() + static_cast<std::ptrdiff_t>(n));
  if (origin_) out.origin_.emplace(origin_->begin(), origin_->begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

DegreeSequence DegreeSequence::tail(std::size_t n) const {
  if (n > size())
    throw BoundsError("tail length " + std::to_string(n) + " exceeds sequence length " +
                      std::to_string(size()));
  const auto skip = static_cast<std::ptrdiff_t>(size() - n);
  DegreeSequence out;
  out.degrees_.assign(degrees_.begin() + skip, degrees_.end());
  if (origin_) out.origin_.emplace(origin_->begin() + skip, origin_->end());
  return out;
}

DegreeSequence degree_sequence(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });

  DegreeSequence ds;
  ds.degrees_.reserve(n);
  for (NodeId v : order) ds.degrees_.push_back(g.degree(v));
  ds.origin_ = std::move(order);
  return ds;
}

}  // namespace richclub
