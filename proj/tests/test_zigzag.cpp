#include <gtest/gtest.h>

#include "oracles/bfs_grower.hpp"
#include "oracles/brute_zigzag.hpp"
#include "support.hpp"

using namespace polyideal;
using testing_support::fixture;
using testing_support::to_oracle;

namespace {

const char* kF7Walk =
    "1 0 4 1 1 1 4 0\n"
    "4 1 5 4 4 1 5 4\n"
    "1 4 4 5 4 4 1 5\n"
    "0 1 1 4 1 4 0 1\n";

bool oracle_accepts(const CellCollection& p, const ZigZagWalk& w) {
  std::vector<oracle::WalkStep> steps;
  std::vector<oracle::XY> exits;
  for (const auto& s : w.steps) {
    steps.push_back({{{s.interval.lo.x, s.interval.lo.y}, {s.interval.hi.x, s.interval.hi.y}},
                     {s.v_entry.x, s.v_entry.y},
                     {s.z.x, s.z.y}});
    exits.push_back({s.v_exit.x, s.v_exit.y});
  }
  return oracle::is_walk(to_oracle(p), steps, exits);
}

}  // namespace

TEST(ZigZag, CoInnerMatchesBruteForce) {
  for (const auto& level : oracle::grow_polyominoes(5))
    for (const auto& c : level) {
      const auto p = testing_support::from_oracle(c);
      const CoInnerTable table(p);
      const auto inner = oracle::inner_intervals(c);
      for (Point a : p.vertex_set())
        for (Point b : p.vertex_set())
          ASSERT_EQ(table(a, b), oracle::co_inner(inner, {a.x, a.y}, {b.x, b.y}));
    }
}

TEST(ZigZag, F7WalkVerifies) {
  const auto p = fixture(7);
  const auto w = walk_from_text(kF7Walk);
  EXPECT_EQ(w.length(), 4u);
  EXPECT_TRUE(verify_zigzag_walk(p, w));
  EXPECT_TRUE(oracle_accepts(p, w));
  EXPECT_EQ(to_text(w), kF7Walk);
}

TEST(ZigZag, CorruptedWalksAreRejected) {
  const auto p = fixture(7);
  auto w = walk_from_text(kF7Walk);
  auto dropped = w;
  dropped.steps.pop_back();
  EXPECT_FALSE(verify_zigzag_walk(p, dropped));
  auto repeated = w;
  repeated.steps[2] = repeated.steps[0];
  EXPECT_FALSE(verify_zigzag_walk(p, repeated));
  EXPECT_FALSE(verify_zigzag_walk(fixture(6), w));
  EXPECT_THROW(walk_from_text("1 0 4 1 9 9 4 0\n"), Error);
  EXPECT_THROW(walk_from_text("1 0 4"), Error);
}

TEST(ZigZag, SearchFindsF7Walk) {
  const auto r = find_zigzag_walk(fixture(7));
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(verify_zigzag_walk(fixture(7), *r.walk));
  EXPECT_TRUE(oracle_accepts(fixture(7), *r.walk));
}

TEST(ZigZag, NoWalkInFixtures) {
  for (int k : {1, 2, 3, 4, 5, 6}) EXPECT_EQ(find_zigzag_walk(fixture(k)).status, SearchStatus::none) << "F" << k;
}

TEST(ZigZag, BudgetExhaustionIsInconclusive) {
  const auto r = find_zigzag_walk(fixture(4), 0, 3);
  EXPECT_EQ(r.status, SearchStatus::inconclusive);
  EXPECT_THROW(find_zigzag_walk(fixture(4), 1), Error);
}

TEST(ZigZag, SearchAgreesWithBruteForce) {
  // Polyominoes up to 7 cells and every 9-cell collection with a hole.
  for (const auto& level : oracle::grow_polyominoes(9))
    for (const auto& c : level) {
      if (c.size() > 7 && oracle::hole_count(c) == 0) continue;
      const auto p = testing_support::from_oracle(c);
      const auto r = find_zigzag_walk(p, 8);
      ASSERT_NE(r.status, SearchStatus::inconclusive);
      const bool brute = oracle::find_walk(c, 8).has_value();
      ASSERT_EQ(r.status == SearchStatus::found, brute) << render_ascii(p);
      if (r.walk) ASSERT_TRUE(oracle_accepts(p, *r.walk));
    }
}

TEST(ZigZag, OrientedSteps) {
  const LatticeInterval i{{0, 0}, {2, 1}};
  const auto steps = oriented_steps(i);
  EXPECT_EQ(steps.size(), 8u);
  for (const auto& s : steps) EXPECT_TRUE(s.well_formed());
}
