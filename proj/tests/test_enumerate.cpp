#include <gtest/gtest.h>

#include "oracles/bfs_grower.hpp"
#include "support.hpp"

using namespace polyideal;

TEST(Enumerate, CountsMatchBfsOracle) {
  const auto levels = oracle::grow_polyominoes(8);
  const std::vector<std::size_t> known{1, 2, 6, 19, 63, 216, 760, 2725};
  for (int n = 1; n <= 8; ++n) {
    const auto fast = enumerate_fixed_polyominoes(n);
    EXPECT_EQ(fast.size(), known[static_cast<std::size_t>(n - 1)]);
    std::set<CellCollection> a(fast.begin(), fast.end());
    EXPECT_EQ(a.size(), fast.size()) << "duplicates at n = " << n;
    std::set<CellCollection> b;
    for (const auto& c : levels[static_cast<std::size_t>(n - 1)]) b.insert(testing_support::from_oracle(c));
    EXPECT_EQ(a, b) << "n = " << n;
  }
}

TEST(Enumerate, OutputIsTranslationNormalized) {
  for (const auto& p : enumerate_fixed_polyominoes(6)) {
    EXPECT_EQ(p.min_cell(), (Point{0, 0}));
    EXPECT_TRUE(is_polyomino(p));
  }
}

TEST(Enumerate, RangeChecks) {
  EXPECT_THROW(enumerate_fixed_polyominoes(0), Error);
  EXPECT_THROW(enumerate_fixed_polyominoes(kMaxEnumerationCells + 1), Error);
}

TEST(Enumerate, WeaklyClosedPathsIncludeF6) {
  const auto paths = enumerate_weakly_closed_paths(9);
  EXPECT_NE(std::find(paths.begin(), paths.end(), testing_support::fixture(6)), paths.end());
}

TEST(Sweep, SingleCell) {
  const auto r = conjecture_sweep(1, 2);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].collections, 1u);
  EXPECT_EQ(r.rows[0].count(Status::prime), 1u);
}

TEST(Sweep, TotalsAddUpAndNoViolations) {
  const auto r = conjecture_sweep(7, 3);
  const std::vector<std::size_t> known{1, 2, 6, 19, 63, 216, 760};
  for (const auto& row : r.rows) {
    std::size_t sum = 0;
    for (auto t : row.totals) sum += t;
    EXPECT_EQ(sum, row.collections);
    EXPECT_EQ(row.collections, known[static_cast<std::size_t>(row.n - 1)]);
  }
  EXPECT_EQ(r.violation_count(), 0u);
  EXPECT_EQ(r.rows[6].weakly_closed_paths, 4u);
}

TEST(Sweep, JobsDoNotChangeTheResult) {
  auto strip = [](json j) {
    j.erase("seconds");
    j.erase("jobs");
    for (auto& row : j["rows"]) row.erase("seconds");
    return j.dump();
  };
  EXPECT_EQ(strip(to_json(conjecture_sweep(8, 2, 1))), strip(to_json(conjecture_sweep(8, 2, 3))));
}

TEST(Sweep, RangeChecks) {
  EXPECT_THROW(conjecture_sweep(0, 3), Error);
  EXPECT_THROW(conjecture_sweep(kMaxSweepCells + 1, 3), Error);
  EXPECT_THROW(conjecture_sweep(3, 1), Error);
}
