#pragma once

// Published values for the order-k length distribution of Christoffel words.

#include <cstdint>
#include <vector>

namespace sturmian::reference {

struct MaxCountRow {
  unsigned order;
  std::uint64_t max_count;               // M_k
  std::vector<std::uint64_t> lengths;    // lengths n with C_k(n) = M_k as listed
};

inline const std::vector<MaxCountRow>& max_count_table() {
  static const std::vector<MaxCountRow> rows = {
      {1, 2, {3}},          {2, 2, {4, 5}},     {3, 4, {7}},
      {4, 4, {9, 11}},      {5, 4, {11, 13, 14, 17, 18, 19}},
      {6, 8, {23}},         {7, 12, {41}},      {8, 12, {43}},
      {9, 16, {71, 73, 83}}, {10, 24, {113}},   {11, 28, {227}},
      {12, 36, {199, 283}}, {13, 48, {449}},    {14, 64, {433}},
      {15, 72, {839}},      {16, 102, {1433}},  {17, 124, {1997}},
      {18, 160, {1987}},    {19, 212, {3361}},  {20, 256, {5557}},
      {21, 332, {8689}},    {22, 444, {8507}},
  };
  return rows;
}

/// card(ML_k) for k = 1, ..., 20 (index 0 holds k = 1).
inline const std::vector<std::uint64_t>& missing_length_counts() {
  static const std::vector<std::uint64_t> counts = {0,   0,   1,   2,    5,    11,   18,   29,   51,   74,
                                                    119, 195, 323, 498, 828, 1361, 2289, 3801, 6305, 10560};
  return counts;
}

}  // namespace sturmian::reference
