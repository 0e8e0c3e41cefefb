#pragma once

// Bit-string conventions shared by every module.
//
// An n-bit string z = z_1 z_2 ... z_n is stored as an unsigned index with z_1
// as the most significant bit (big-endian). Increasing index order is
// therefore lexicographic order on strings.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "adiabatic/error.hpp"

namespace adiabatic {

using Index = std::uint64_t;

inline constexpr int kMaxBits = 62;

inline int hamming_weight(Index z) { return std::popcount(z); }

inline Index dimension_of(int n) { return Index{1} << n; }

/// Value of bit z_i (1-based) of an n-bit string.
inline int bit_at(Index z, int n, int i) { return static_cast<int>((z >> (n - i)) & 1u); }

/// Index with only bit z_i set.
inline Index unit_string(int n, int i) { return Index{1} << (n - i); }

inline Index all_ones(int n) { return dimension_of(n) - 1; }

inline std::string to_bitstring(Index z, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 1; i <= n; ++i) {
    if (bit_at(z, n, i)) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

inline Index parse_bitstring(std::string_view text) {
  if (text.empty() || text.size() > kMaxBits) throw ParseError("bit string must have 1.." + std::to_string(kMaxBits) + " characters");
  Index z = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("bit string may only contain 0 and 1: '" + std::string(text) + "'");
    z = (z << 1) | static_cast<Index>(c == '1');
  }
  return z;
}

inline bool is_power_of_two(std::size_t d) { return d != 0 && (d & (d - 1)) == 0; }

inline int log2_exact(std::size_t d) { return std::countr_zero(d); }

}  // namespace adiabatic
