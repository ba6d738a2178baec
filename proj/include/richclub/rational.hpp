#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace richclub {

__extension__ typedef unsigned __int128 UInt128;

/// Non-negative fraction in lowest terms, for exact expectation checks.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(UInt128 num, UInt128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    auto g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num > UINT64_MAX || den > UINT64_MAX) throw std::overflow_error("rational overflow");
    return {static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den)};
  }

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<UInt128>(a.num) * b.den ==
           static_cast<UInt128>(b.num) * a.den;
  }

 private:
  static UInt128 gcd128(UInt128 a, UInt128 b) {
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
};

}  // namespace richclub
