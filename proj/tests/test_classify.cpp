#include <gtest/gtest.h>

#include "support.hpp"

using namespace polyideal;
using testing_support::fixture;

TEST(Classify, SimpleFixturesArePrime) {
  for (int k : {1, 2, 3, 5}) {
    const auto v = classify(fixture(k));
    EXPECT_EQ(v.status, Status::prime) << "F" << k;
    EXPECT_EQ(v.rule, Rule::simple);
    ASSERT_TRUE(std::holds_alternative<ChordalityCertificate>(v.evidence));
    EXPECT_TRUE(std::get<ChordalityCertificate>(v.evidence).weakly_chordal);
  }
}

TEST(Classify, F6PrimeByLConfiguration) {
  const auto v = classify(fixture(6));
  EXPECT_EQ(v.status, Status::prime);
  EXPECT_EQ(v.rule, Rule::path_configuration);
  ASSERT_TRUE(std::holds_alternative<ConfigurationWitness>(v.evidence));
  EXPECT_STREQ(kind_name(std::get<ConfigurationWitness>(v.evidence)), "L-configuration");
  ASSERT_TRUE(v.oracle.has_value());
  EXPECT_TRUE(v.oracle->passed());
  EXPECT_EQ(v.oracle->degree, 4u);
  ASSERT_TRUE(v.path.has_value());
}

TEST(Classify, F7NotPrimeWithWalk) {
  const auto p = fixture(7);
  const auto v = classify(p);
  EXPECT_EQ(v.status, Status::not_prime);
  EXPECT_EQ(v.rule, Rule::path_without_configuration);
  ASSERT_TRUE(std::holds_alternative<ZigZagWalk>(v.evidence));
  EXPECT_TRUE(verify_zigzag_walk(p, std::get<ZigZagWalk>(v.evidence)));
}

TEST(Classify, RingFallsBackToConjecture) {
  const auto v = classify(fixture(4));
  EXPECT_EQ(v.status, Status::conjecturally_prime);
  EXPECT_EQ(v.rule, Rule::no_zigzag_conjecture);
}

TEST(Classify, DisconnectedInputIsInconclusive) {
  const auto v = classify(CellCollection{{0, 0}, {3, 0}});
  EXPECT_EQ(v.status, Status::inconclusive);
  EXPECT_EQ(v.rule, Rule::not_weakly_connected);
  EXPECT_FALSE(v.reason.empty());
}

TEST(Classify, TinyBudgetIsInconclusive) {
  Budget b;
  b.zigzag_nodes = 2;
  const auto v = classify(fixture(4), b);
  EXPECT_EQ(v.status, Status::inconclusive);
  EXPECT_EQ(v.rule, Rule::budget_exhausted);
}

TEST(Classify, Deterministic) {
  for (int k = 1; k <= 7; ++k) {
    const auto a = to_json(classify(fixture(k))).dump();
    const auto b = to_json(classify(fixture(k))).dump();
    EXPECT_EQ(a, b);
  }
}

TEST(Classify, CitationsAreFilled) {
  for (int k = 1; k <= 7; ++k) EXPECT_FALSE(classify(fixture(k)).citation().empty());
}

TEST(Audit, FixturesAreClean) {
  for (int k = 1; k <= 7; ++k) {
    const auto p = fixture(k);
    const auto v = classify(p);
    EXPECT_TRUE(consistency_audit(p, v).empty()) << "F" << k;
  }
}

TEST(Audit, FabricatedWalkIsCaught) {
  const auto p = fixture(6);
  auto v = classify(fixture(7));  // a NotPrime verdict with F7's walk
  const auto found = consistency_audit(p, v);
  EXPECT_FALSE(found.empty());
}

TEST(Audit, FabricatedConfigurationIsCaught) {
  const auto p = fixture(6);
  auto v = classify(p);
  auto w = std::get<ConfigurationWitness>(v.evidence);
  std::get<LConfiguration>(w).cells[0] = Cell{1, 1};
  v.evidence = w;
  EXPECT_FALSE(consistency_audit(p, v).empty());
}

TEST(Audit, UnsupportedPrimeIsCaught) {
  const auto p = fixture(4);
  auto v = classify(p);
  v.status = Status::prime;
  EXPECT_FALSE(consistency_audit(p, v).empty());
}

TEST(Audit, TamperedOracleIsCaught) {
  const auto p = fixture(6);
  auto v = classify(p);
  v.marked.clear();
  EXPECT_FALSE(consistency_audit(p, v).empty());
}
