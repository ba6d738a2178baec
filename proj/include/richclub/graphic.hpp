#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace richclub {

struct GraphicCheck {
  bool graphic = true;
  /// Empty when graphic; otherwise the violated condition.
  std::string reason;
  /// 1-based prefix length at which the Erdős–Gallai inequality fails, or 0.
  std::size_t failing_k = 0;
};

/// Erdős–Gallai test with a description of the first violation. The input
/// need not be sorted. Throws DomainError on a negative entry.
GraphicCheck check_graphic(std::span<const std::int64_t> seq);

bool is_graphic(std::span<const std::int64_t> seq);

}  // namespace richclub
