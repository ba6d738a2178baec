#include "richclub/graphic.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "richclub/error.hpp"

namespace richclub {

// Erdős–Gallai: an even-sum sequence d_1 >= ... >= d_n is graphic iff for
// every k, sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i).
GraphicCheck check_graphic(std::span<const std::int64_t> seq) {
  std::vector<std::int64_t> d(seq.begin(), seq.end());
  for (auto x : d) {
    if (x < 0) throw DomainError("degree sequence has a negative entry");
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::size_t n = d.size();

  std::int64_t total = 0;
  for (auto x : d) total += x;
  if (total % 2 != 0) return {false, "odd degree sum", 0};

  // suffix[i] = d_i + ... + d_{n-1}
  std::vector<std::int64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + d[i];

  std::int64_t prefix = 0;
  // Invariant: d[j] >= k for j < boundary, d[j] < k for j >= boundary.
  std::size_t boundary = n;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    prefix += d[k - 1];
    while (boundary > 0 && d[boundary - 1] < kk) --boundary;
    // Positions k..n-1 split into those with d >= k (contribute k) and the rest.
    const std::size_t big_end = std::max(boundary, k);
    const auto capped = kk * static_cast<std::int64_t>(big_end - k);
    const std::int64_t rhs = kk * (kk - 1) + capped + suffix[big_end];
    if (prefix > rhs) {
      return {false,
              "Erdos-Gallai inequality fails at k=" + std::to_string(k) + ": prefix sum " +
                  std::to_string(prefix) + " > " + std::to_string(rhs),
              k};
    }
  }
  return {};
}

bool is_graphic(std::span<const std::int64_t> seq) { return check_graphic(seq).graphic; }

}  // namespace richclub
