#include <gtest/gtest.h>

#include "oracles/bfs_grower.hpp"
#include "oracles/brute_wcp.hpp"
#include "support.hpp"

using namespace polyideal;
using testing_support::fixture;
using testing_support::to_oracle;

TEST(PathClass, F6IsAWeaklyClosedPath) {
  const auto p = fixture(6);
  const auto w = recognize_weakly_closed_path(p);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->hooking_corner, (Point{1, 1}));
  EXPECT_EQ(w->size(), 9u);
  EXPECT_TRUE(verify_weakly_closed_path(p, *w));
  const auto o = oracle::weakly_closed_path(to_oracle(p));
  ASSERT_TRUE(o.has_value());
  EXPECT_EQ(o->hook, (oracle::XY{1, 1}));
}

TEST(PathClass, OtherFixturesAreNot) {
  for (int k : {1, 2, 3, 4}) EXPECT_FALSE(recognize_weakly_closed_path(fixture(k)).has_value());
  EXPECT_THROW(recognize_weakly_closed_path(fixture(5)), Error);
  EXPECT_TRUE(recognize_closed_path(fixture(4)).has_value());
  EXPECT_FALSE(recognize_closed_path(fixture(6)).has_value());
}

TEST(PathClass, TamperedOrderingFailsVerification) {
  const auto p = fixture(6);
  auto w = *recognize_weakly_closed_path(p);
  std::swap(w.ordering[3], w.ordering[4]);
  EXPECT_FALSE(verify_weakly_closed_path(p, w));
  w = *recognize_weakly_closed_path(p);
  w.hooking_corner = {0, 0};
  EXPECT_FALSE(verify_weakly_closed_path(p, w));
}

TEST(PathClass, EnumerationMatchesDefinitionOracle) {
  const auto levels = oracle::grow_polyominoes(11);
  for (int n = 7; n <= 11; ++n) {
    std::set<CellCollection> brute;
    for (const auto& c : levels[static_cast<std::size_t>(n - 1)]) {
      // Every cell of a weakly closed path has at most two edge neighbours.
      bool thin = true;
      for (auto [x, y] : c) {
        int deg = 0;
        for (oracle::XY d : {oracle::XY{1, 0}, oracle::XY{-1, 0}, oracle::XY{0, 1}, oracle::XY{0, -1}})
          deg += c.count({x + d.first, y + d.second}) ? 1 : 0;
        thin = thin && deg <= 2;
      }
      if (thin && oracle::weakly_closed_path(c)) brute.insert(testing_support::from_oracle(c));
    }
    const auto fast = enumerate_weakly_closed_paths(n);
    std::set<CellCollection> fast_set(fast.begin(), fast.end());
    EXPECT_EQ(fast_set.size(), fast.size()) << "duplicates at n = " << n;
    EXPECT_EQ(fast_set, brute) << "n = " << n;
    for (const auto& p : fast) EXPECT_TRUE(recognize_weakly_closed_path(p).has_value());
  }
}

TEST(PathClass, BaselineCounts) {
  const std::vector<std::size_t> expected{4, 0, 8, 0, 32, 0, 144};
  for (int n = 7; n <= 13; ++n)
    EXPECT_EQ(enumerate_weakly_closed_paths(n).size(), expected[static_cast<std::size_t>(n - 7)]) << n;
  EXPECT_THROW(enumerate_weakly_closed_paths(6), Error);
}

TEST(PathClass, F6HasAnLConfiguration) {
  const auto p = fixture(6);
  const auto w = find_L_configuration(p);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_configuration(p, ConfigurationWitness{*w}));
  const auto any = find_any_prime_configuration(p);
  ASSERT_TRUE(any.has_value());
  EXPECT_STREQ(kind_name(*any), "L-configuration");
  const auto marked = marked_set_for_configuration(p, *any);
  EXPECT_EQ(marked, (std::vector<Point>{{3, 0}, {4, 0}, {3, 1}, {4, 1}}));
}

TEST(PathClass, F7HasNoConfiguration) {
  const auto p = fixture(7);
  ASSERT_TRUE(recognize_weakly_closed_path(p).has_value());
  EXPECT_FALSE(find_L_configuration(p).has_value());
  EXPECT_FALSE(find_weak_L_configuration(p).has_value());
  EXPECT_FALSE(find_ladder(p, 3).has_value());
  EXPECT_FALSE(find_weak_ladder(p).has_value());
}

TEST(PathClass, F7IsMinimal) {
  for (int n = 7; n < 15; ++n)
    for (const auto& p : enumerate_weakly_closed_paths(n)) ASSERT_TRUE(find_any_prime_configuration(p).has_value());
  bool found = false;
  for (const auto& p : enumerate_weakly_closed_paths(15))
    if (!find_any_prime_configuration(p)) found = found || p == canonicalize(fixture(7));
  EXPECT_TRUE(found);
}

TEST(PathClass, WitnessesSurviveSymmetry) {
  for (const auto& base : enumerate_weakly_closed_paths(11))
    for (Dihedral t : Dihedral::all()) {
      const auto p = transform(base, t);
      const auto w = find_any_prime_configuration(p);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(verify_configuration(p, *w));
      for (Point q : marked_set_for_configuration(p, *w)) EXPECT_TRUE(p.has_vertex(q));
    }
}

TEST(PathClass, FabricatedWitnessFailsRecheck) {
  const auto p = fixture(6);
  auto w = *find_L_configuration(p);
  w.cells[2] = Cell{1, 1};
  EXPECT_FALSE(verify_configuration(p, ConfigurationWitness{w}));
}
