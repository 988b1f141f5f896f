#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "tpcalc/partitions.hpp"

using namespace tpcalc;

namespace {

// Brute force: every labelling {0..r-1} -> {0..r-1}, collapsed to a set of blocks.
std::set<std::set<std::set<int>>> brute_force_partitions(int r) {
  std::set<std::set<std::set<int>>> out;
  std::vector<int> label(r, 0);
  while (true) {
    std::vector<std::set<int>> blocks(r);
    for (int i = 0; i < r; ++i) blocks[label[i]].insert(i);
    std::set<std::set<int>> p;
    for (auto& b : blocks)
      if (!b.empty()) p.insert(b);
    out.insert(p);
    int i = 0;
    while (i < r && ++label[i] == r) label[i++] = 0;
    if (i == r) break;
  }
  return out;
}

}  // namespace

TEST(SetPartitions, Counts) {
  EXPECT_EQ(set_partitions(1).size(), 1u);
  EXPECT_EQ(set_partitions(2).size(), 2u);
  EXPECT_EQ(set_partitions(3).size(), 5u);
  EXPECT_EQ(set_partitions(4).size(), 15u);
  EXPECT_THROW(set_partitions(0), Error);
}

TEST(SetPartitions, MatchBruteForce) {
  for (int r = 1; r <= 6; ++r) {
    std::set<std::set<std::set<int>>> ours;
    for (const auto& p : set_partitions(r)) {
      std::set<std::set<int>> s;
      std::vector<int> seen;
      for (const auto& b : p.blocks) {
        EXPECT_FALSE(b.empty());
        EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
        s.insert(std::set<int>(b.begin(), b.end()));
        seen.insert(seen.end(), b.begin(), b.end());
      }
      std::sort(seen.begin(), seen.end());
      EXPECT_EQ(seen.size(), static_cast<std::size_t>(r));
      EXPECT_TRUE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      for (std::size_t k = 1; k < p.blocks.size(); ++k) EXPECT_LT(p.blocks[k - 1].front(), p.blocks[k].front());
      ours.insert(s);
    }
    EXPECT_EQ(ours, brute_force_partitions(r)) << "r=" << r;
    EXPECT_EQ(set_partitions(r).size(), bell_number(r).get_ui());
  }
}

TEST(SetPartitions, DeterministicOrder) {
  auto p = set_partitions(3);
  EXPECT_EQ(p.front().blocks, (std::vector<std::vector<int>>{{0, 1, 2}}));
  EXPECT_EQ(p.back().blocks, (std::vector<std::vector<int>>{{0}, {1}, {2}}));
}

TEST(BellNumbers, Values) {
  const unsigned long expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 0; n < 9; ++n) EXPECT_EQ(bell_number(n).get_ui(), expected[n]);
}
