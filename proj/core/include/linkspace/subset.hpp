#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace linkspace {

/// Subset of {1..n} as a bitmask; element i lives in bit i-1.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 16;

constexpr Subset element_bit(int element) { return Subset{1} << (element - 1); }
constexpr Subset full_subset(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
constexpr bool contains(Subset s, int element) { return (s & element_bit(element)) != 0; }
constexpr int subset_size(Subset s) { return std::popcount(s); }

/// Elements of `s` in increasing order.
inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

/// Brace notation used in every report, e.g. `{1,3}`.
inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace linkspace
