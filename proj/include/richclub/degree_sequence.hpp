#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "richclub/types.hpp"

namespace richclub {

class Graph;

/// Degrees in non-increasing order, optionally remembering which node each
/// position came from. Ties are ordered by ascending node index.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  /// Sorts `degrees` non-increasing. No origin map.
  explicit DegreeSequence(std::vector<Count> degrees);

  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  Count operator[](std::size_t i) const { return degrees_[i]; }
  std::span<const Count> values() const noexcept { return degrees_; }
  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }

  Count sum() const noexcept;
  /// Half the degree sum; the edge count of any realization.
  Count edge_count() const noexcept { return sum() / 2; }

  bool has_origin() const noexcept { return origin_.has_value(); }
  /// Node index at sequence position i. Requires has_origin().
  NodeId origin(std::size_t i) const { return (*origin_)[i]; }

  /// First n entries. Throws BoundsError when n > size().
  DegreeSequence head(std::size_t n) const;
  /// Last n entries. Throws BoundsError when n > size().
  DegreeSequence tail(std::size_t n) const;

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.degrees_ == b.degrees_;
  }

 private:
  friend DegreeSequence degree_sequence(const Graph& g);

  std::vector<Count> degrees_;
  std::optional<std::vector<NodeId>> origin_;
};

DegreeSequence degree_sequence(const Graph& g);

}  // namespace richclub
