#pragma once

// Reference values the reproduction suite compares against.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace virmod::fixtures {

/// Good primes at or below 2l^2+l-3, as listed for l = 2..6; every other
/// prime in that range is bad.
inline const std::map<int, std::vector<std::uint32_t>>& good_primes_below_bound() {
  static const std::map<int, std::vector<std::uint32_t>> table{
      {2, {3, 5}}, {3, {5, 11}}, {4, {5, 19, 29, 31}}, {5, {7, 29, 41, 43, 47}}, {6, {7, 41, 71, 73}},
  };
  return table;
}

/// Bad list for l = 2, 3 as printed, including the non-prime 9 at l = 3.
inline const std::map<int, std::vector<std::uint32_t>>& printed_bad_lists() {
  static const std::map<int, std::vector<std::uint32_t>> table{
      {2, {2, 7}}, {3, {2, 3, 7, 9, 13, 17}},
  };
  return table;
}

/// The printed 9 x 6 half difference table for l = 5.
inline constexpr std::array<std::array<std::int64_t, 6>, 9> kDMatrixEll5{{
    {2, 4, 10, 16, 22, 28},
    {9, 3, 3, 9, 15, 21},
    {16, 10, 4, 2, 8, 14},
    {23, 17, 11, 5, 1, 7},
    {30, 24, 18, 12, 6, 0},
    {37, 31, 25, 19, 13, 7},
    {44, 38, 32, 26, 20, 14},
    {51, 45, 39, 33, 27, 21},
    {58, 52, 46, 40, 34, 28},
}};

}  // namespace virmod::fixtures
