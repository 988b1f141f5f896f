#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tpcalc/rational.hpp"

namespace tpcalc {

/// Blocks of 0-based element indices; blocks sorted by least element, each
/// block ascending.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All partitions of {0, ..., r-1}, enumerated through restricted growth
/// strings in lexicographic order (the single block comes first).
inline std::vector<SetPartition> set_partitions(int r) {
  if (r < 1) throw Error("set_partitions needs r >= 1");
  std::vector<SetPartition> out;
  std::vector<int> rgs(r, 0);
  std::vector<int> prefix_max(r, 0);  // max of rgs[0..i]
  while (true) {
    SetPartition p;
    int blocks = prefix_max[r - 1] + 1;
    p.blocks.resize(blocks);
    for (int i = 0; i < r; ++i) p.blocks[rgs[i]].push_back(i);
    out.push_back(std::move(p));

    int i = r - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < r; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

/// Bell numbers by the Bell triangle.
inline Integer bell_number(int n) {
  if (n < 0) throw Error("bell_number needs n >= 0");
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace tpcalc
