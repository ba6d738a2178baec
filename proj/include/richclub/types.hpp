#pragma once

#include <cstdint>

namespace richclub {

using NodeId = std::uint32_t;
using Count = std::uint64_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Count choose2(Count n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace richclub
