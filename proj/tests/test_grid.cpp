#include <gtest/gtest.h>

#include "oracles/bfs_grower.hpp"
#include "support.hpp"

using namespace polyideal;
using testing_support::fixture;
using testing_support::to_oracle;

TEST(Grid, FixtureShapes) {
  EXPECT_EQ(fixture(1).size(), 1u);
  EXPECT_EQ(fixture(2).size(), 4u);
  EXPECT_EQ(fixture(3), (CellCollection{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(fixture(4).size(), 8u);
  EXPECT_EQ(fixture(5), (CellCollection{{0, 0}, {1, 1}}));
  EXPECT_EQ(fixture(6), (CellCollection{{1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}));
  EXPECT_EQ(fixture(7).size(), 15u);
}

TEST(Grid, EmptyCollectionIsRejected) {
  EXPECT_THROW(CellCollection(std::vector<Cell>{}), Error);
}

TEST(Grid, ConnectivityAndHoles) {
  EXPECT_TRUE(is_polyomino(fixture(4)));
  EXPECT_FALSE(is_polyomino(fixture(5)));
  EXPECT_TRUE(is_weakly_connected(fixture(5)));
  EXPECT_FALSE(is_weakly_connected(CellCollection{{0, 0}, {2, 0}}));
  EXPECT_TRUE(is_simple(fixture(5)));
  ASSERT_EQ(holes(fixture(4)).size(), 1u);
  EXPECT_EQ(holes(fixture(4)).front(), (CellCollection{{1, 1}}));
  ASSERT_EQ(holes(fixture(6)).size(), 1u);
  EXPECT_EQ(holes(fixture(6)).front(), (CellCollection{{1, 1}, {2, 1}}));
}

TEST(Grid, InnerIntervalCounts) {
  EXPECT_EQ(inner_intervals(fixture(1)).size(), 1u);
  EXPECT_EQ(inner_intervals(fixture(2)).size(), 9u);
  EXPECT_EQ(inner_intervals(fixture(5)).size(), 2u);
}

TEST(Grid, InnerIntervalsMatchBruteForce) {
  const auto levels = oracle::grow_polyominoes(6);
  for (const auto& level : levels)
    for (const auto& c : level) {
      const auto p = testing_support::from_oracle(c);
      std::set<std::array<int, 4>> brute, fast;
      for (const auto& r : oracle::inner_intervals(c)) brute.insert({r.lo.first, r.lo.second, r.hi.first, r.hi.second});
      for (const auto& i : inner_intervals(p)) fast.insert({i.lo.x, i.lo.y, i.hi.x, i.hi.y});
      ASSERT_EQ(fast, brute);
    }
}

TEST(Grid, HolesMatchFloodFillOracle) {
  for (const auto& level : oracle::grow_polyominoes(8))
    for (const auto& c : level) {
      const auto p = testing_support::from_oracle(c);
      ASSERT_EQ(holes(p).size(), oracle::hole_count(c));
    }
}

TEST(Grid, MaximalEdgeIntervalsOfSquare) {
  const auto h = maximal_edge_intervals(fixture(2), Orientation::horizontal);
  ASSERT_EQ(h.size(), 3u);
  for (const auto& e : h) {
    EXPECT_EQ(e.lo, 0);
    EXPECT_EQ(e.hi, 2);
  }
}

TEST(Grid, EdgeIntervalsMatchBruteForce) {
  for (const auto& level : oracle::grow_polyominoes(6))
    for (const auto& c : level) {
      const auto p = testing_support::from_oracle(c);
      for (Point a : p.vertex_set())
        for (Point b : p.vertex_set())
          if (a != b)
            ASSERT_EQ(on_common_maximal_interval(p, a, b), oracle::same_edge_interval(c, {a.x, a.y}, {b.x, b.y}));
    }
}

TEST(Grid, DihedralGroup) {
  const auto p = fixture(6);
  for (Dihedral t : Dihedral::all()) {
    EXPECT_EQ(transform(transform(p, t), t.inverse()), p);
    EXPECT_EQ(transform(p, t).size(), p.size());
  }
  std::set<CellCollection> images;
  for (Dihedral t : Dihedral::all()) images.insert(canonicalize(transform(fixture(3), t)));
  EXPECT_EQ(images.size(), 4u);
}

TEST(Grid, Canonicalize) {
  const CellCollection p{{5, -3}, {6, -3}};
  EXPECT_EQ(canonicalize(p), (CellCollection{{0, 0}, {1, 0}}));
}
