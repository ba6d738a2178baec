#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "richclub/types.hpp"

namespace richclub {

class Graph;

/// Binary node labeling c_i in {0, 1}.
class Characteristic {
 public:
  Characteristic() = default;
  /// Throws DomainError on any value other than 0 or 1.
  explicit Characteristic(std::vector<std::uint8_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool operator[](NodeId v) const { return values_[v] != 0; }
  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::size_t n1() const noexcept { return n1_; }
  std::size_t n0() const noexcept { return values_.size() - n1_; }

  Characteristic complement() const;

 private:
  std::vector<std::uint8_t> values_;
  std::size_t n1_ = 0;
};

/// c_i = 1 iff degree(i) > k.
Characteristic characteristic_from_threshold(const Graph& g, Count k);

enum class RankMode { highest, lowest };

/// Flags exactly n1 nodes by degree rank. Ties go to the lower node index in
/// both modes. Throws BoundsError when n1 > N.
Characteristic characteristic_top_n(const Graph& g, std::size_t n1, RankMode mode);

/// Edge counts by dyad class.
struct DyadCounts {
  Count m11 = 0;
  Count m10 = 0;
  Count m00 = 0;

  Count total() const noexcept { return m11 + m10 + m00; }
  friend bool operator==(const DyadCounts&, const DyadCounts&) = default;
};

/// Throws DomainError when the characteristic does not cover every node.
DyadCounts count_dyads(const Graph& g, const Characteristic& c);

}  // namespace richclub
