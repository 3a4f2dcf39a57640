#include <gtest/gtest.h>

#include <functional>

#include "oracles/bfs_grower.hpp"
#include "support.hpp"

using namespace polyideal;
using testing_support::fixture;

namespace {

// Brute force: any simple cycle of length >= 6 without a chord.
bool has_long_chordless_cycle(const BipartiteIntervalGraph& g) {
  const int n = g.node_count();
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> dfs = [&](int u) -> bool {
    for (int w : g.neighbours(u)) {
      if (w == path.front() && path.size() >= 6) {
        bool chord = false;
        for (std::size_t a = 0; a < path.size() && !chord; ++a)
          for (std::size_t b = a + 2; b < path.size() && !chord; ++b)
            if (!(a == 0 && b + 1 == path.size()) && g.adjacent(path[a], path[b])) chord = true;
        if (!chord) return true;
      }
      if (used[static_cast<std::size_t>(w)] || w < path.front()) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[static_cast<std::size_t>(s)] = 1;
    if (dfs(s)) return true;
  }
  return false;
}

}  // namespace

TEST(IntervalGraph, SquareGraph) {
  const auto g = build_graph(fixture(2));
  EXPECT_EQ(g.v_nodes().size(), 3u);
  EXPECT_EQ(g.h_nodes().size(), 3u);
  EXPECT_EQ(g.edges().size(), 9u);
  EXPECT_TRUE(is_weakly_chordal(g));
}

TEST(IntervalGraph, DiagonalPair) {
  // The shared corner joins two unit intervals on each axis into one.
  const auto g = build_graph(fixture(5));
  EXPECT_EQ(g.v_nodes().size(), 3u);
  EXPECT_EQ(g.h_nodes().size(), 3u);
  EXPECT_EQ(g.edges().size(), 7u);
  EXPECT_TRUE(is_weakly_chordal(g));
}

TEST(IntervalGraph, SquareRingIsCompleteBipartite) {
  // Every edge line of the ring is one full interval.
  const auto g = build_graph(fixture(4));
  EXPECT_EQ(g.v_nodes().size(), 4u);
  EXPECT_EQ(g.h_nodes().size(), 4u);
  EXPECT_EQ(g.edges().size(), 16u);
  EXPECT_TRUE(is_weakly_chordal(g));
}

TEST(IntervalGraph, SkewRingHasLongChordlessCycle) {
  // Smallest size with a non weakly chordal graph.
  const auto g = build_graph(parse_ascii("###.\n#.##\n#..#\n###.\n"));
  EXPECT_FALSE(is_weakly_chordal(g));
  EXPECT_FALSE(enumerate_chordless_cycles(g, 6).empty());
}

TEST(IntervalGraph, ChordlessCycleArgumentChecks) {
  const auto g = build_graph(fixture(2));
  EXPECT_THROW(enumerate_chordless_cycles(g, 5), Error);
  EXPECT_THROW(enumerate_chordless_cycles(g, 2), Error);
}

TEST(IntervalGraph, WeakChordalityMatchesBruteForce) {
  for (const auto& level : oracle::grow_polyominoes(7))
    for (const auto& c : level) {
      const auto g = build_graph(testing_support::from_oracle(c));
      ASSERT_EQ(is_weakly_chordal(g), !has_long_chordless_cycle(g));
    }
}

TEST(IntervalGraph, CyclesAreCanonical) {
  const auto g = build_graph(fixture(4));
  const auto cycles = enumerate_cycles(g, 8);
  std::set<GraphCycle> seen(cycles.begin(), cycles.end());
  EXPECT_EQ(seen.size(), cycles.size());
  for (const auto& c : cycles) {
    EXPECT_EQ(canonical(c), c);
    EXPECT_TRUE(is_graph_cycle(g, c));
  }
}

TEST(IntervalGraph, PrimitiveCycleRoundTrip) {
  const auto p = fixture(4);
  const auto g = build_graph(p);
  for (const auto& c : enumerate_cycles(g, 8)) {
    const auto lc = cycle_to_primitive_cycle(g, c);
    EXPECT_TRUE(is_lattice_cycle(p, lc));
    EXPECT_TRUE(is_primitive_cycle(p, lc));
    EXPECT_EQ(lattice_cycle_to_graph_cycle(g, lc), c);
  }
}

TEST(IntervalGraph, CrossingCycleOfDiagonalPair) {
  const auto p = fixture(5);
  const auto g = build_graph(p);
  bool crossing_seen = false;
  for (const auto& c : enumerate_cycles(g, 6)) {
    const auto lc = cycle_to_primitive_cycle(g, c);
    if (!has_self_crossing(p, lc)) continue;
    crossing_seen = true;
    EXPECT_EQ(lc.vertices().size(), 6u);
  }
  EXPECT_TRUE(crossing_seen);
}

TEST(IntervalGraph, CycleBinomial) {
  const auto g = build_graph(fixture(1));
  const auto cycles = enumerate_cycles(g, 4);
  ASSERT_EQ(cycles.size(), 1u);
  const auto lc = cycle_to_primitive_cycle(g, cycles.front());
  const auto f = cycle_binomial(lc);
  EXPECT_TRUE(same_up_to_sign(f, inner_2_minors(fixture(1)).front()));
  EXPECT_THROW(cycle_binomial(LatticeCycle{{{0, 0}, {1, 0}, {1, 1}, {0, 0}}}), Error);
}

TEST(IntervalGraph, NonLiftableCycleIsRejected) {
  const auto g = build_graph(fixture(2));
  EXPECT_THROW(cycle_to_primitive_cycle(g, GraphCycle{{0, 1}}), Error);
}
