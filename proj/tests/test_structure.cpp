#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "triodyn/error.hpp"
#include "triodyn/graphs.hpp"
#include "triodyn/harness.hpp"
#include "triodyn/structure.hpp"

using namespace triodyn;

using oracles::Partition;
using oracles::brute_block_structures;

TEST(Blocks, Examples) {
  EXPECT_TRUE(has_block_structure(fixtures::primitive3()).empty());
  EXPECT_TRUE(has_block_structure(fixtures::lambda29()).empty());
  const Pattern six = fixtures::all_black6();
  const auto bs = has_block_structure(six);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].quotient_period, 3);
  EXPECT_EQ(bs[0].block_size, 2);
  for (const auto& b : bs[0].blocks) {
    EXPECT_EQ(six.branch_of(b[0]), six.branch_of(b[1]));
  }
}

TEST(Blocks, AgreesWithBruteForcePartitionSearch) {
  std::size_t with_blocks = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Pattern& p : enumerate_patterns(n)) {
      std::vector<Partition> fast;
      for (const BlockStructure& bs : has_block_structure(p)) {
        EXPECT_EQ(bs.quotient_period * bs.block_size, n);
        Partition part = bs.blocks;
        std::sort(part.begin(), part.end());
        fast.push_back(part);
      }
      std::sort(fast.begin(), fast.end());
      ASSERT_EQ(fast, brute_block_structures(p)) << serialize(p);
      with_blocks += !fast.empty();
    }
  }
  EXPECT_GT(with_blocks, 0u);
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_regular(fixtures::primitive3()));
  EXPECT_FALSE(is_regular(fixtures::primitive2()));
  EXPECT_TRUE(is_regular(fixtures::lambda29()));
  EXPECT_TRUE(is_regular(fixtures::psi25()));
  EXPECT_TRUE(is_admissible(fixtures::lambda29()));
}

TEST(Regular, PointsOnEveryBranch) {
  for (const Pattern& p : regular_patterns_up_to(6)) {
    for (int b = 0; b < kBranches; ++b) EXPECT_GT(p.count(b), 0) << serialize(p);
  }
}

TEST(Exact, Examples) {
  EXPECT_TRUE(is_exact(fixtures::lambda29()));
  EXPECT_TRUE(is_exact(fixtures::psi25()));
  EXPECT_FALSE(is_exact(fixtures::primitive3()));
  if (is_regular(fixtures::all_black6())) {
    EXPECT_FALSE(is_exact(fixtures::all_black6()));
  }
  try {
    is_exact(fixtures::primitive2());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

TEST(Exact, AgreesWithCoveringPrimitivityUpToSix) {
  for (const Pattern& p : regular_patterns_up_to(6)) {
    EXPECT_EQ(is_exact(p), is_primitive(covering_graph(embed(p)))) << serialize(p);
  }
}

TEST(Exact, CoprimeRotationPairsAreExact) {
  for (const Pattern& p : regular_patterns_up_to(6)) {
    const RotationPair rp = rotation_data(p).pair;
    if (p.period() > 3 && std::gcd(rp.d, rp.n) == 1) {
      EXPECT_TRUE(is_exact(p)) << serialize(p);
    }
  }
}

TEST(ForcedCycles, ExactRecordsHaveNoBlocks) {
  for (const Pattern& p : {fixtures::lambda29(), fixtures::psi25()}) {
    for (const CycleRecord& c : forced_cycles(p, 10)) {
      if (c.exact) {
        EXPECT_TRUE(has_block_structure(c.pattern).empty());
      }
      EXPECT_EQ(c.rotation.pair, rotation_data(c.pattern).pair);
    }
  }
}

TEST(Forces, Examples) {
  EXPECT_TRUE(forces(fixtures::psi25(), fixtures::primitive3()));
  EXPECT_TRUE(forces(fixtures::primitive3(), fixtures::primitive3()));
  EXPECT_FALSE(forces(fixtures::primitive3(), fixtures::psi25()));
  const Pattern rotated = fixtures::primitive3().relabel({1, 2, 0});
  EXPECT_TRUE(forces(fixtures::psi25(), rotated, true));
}

TEST(Forces, AntisymmetricOnSmallCorpus) {
  const auto corpus = regular_patterns_up_to(5);
  for (const Pattern& a : corpus) {
    for (const Pattern& b : forced_patterns(a, 5)) {
      if (b == a) continue;
      EXPECT_FALSE(forces(b, a)) << serialize(a) << serialize(b);
    }
  }
}

TEST(Twist, Examples) {
  const TwistVerdict prim = is_triod_twist(fixtures::primitive3(), 9);
  EXPECT_EQ(prim.kind, TwistVerdict::Kind::no_counterexample_up_to);
  EXPECT_EQ(prim.cap, 9);
  EXPECT_EQ(is_triod_twist(fixtures::lambda29(), 9).kind, TwistVerdict::Kind::no_counterexample_up_to);
  EXPECT_EQ(is_triod_twist(fixtures::psi25(), 12).kind, TwistVerdict::Kind::no_counterexample_up_to);
}

TEST(Twist, NonOrderPreservingRegularPatternIsRejected) {
  bool seen = false;
  for (const Pattern& p : regular_patterns_up_to(6)) {
    if (is_order_preserving(p)) continue;
    const TwistVerdict v = is_triod_twist(p, 6);
    EXPECT_EQ(v.kind, TwistVerdict::Kind::no);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, p);
    seen = true;
    break;
  }
  EXPECT_TRUE(seen);
}

TEST(Twist, WitnessSharesRotationNumber) {
  for (const Pattern& p : regular_patterns_up_to(5)) {
    const TwistVerdict v = is_triod_twist(p, 8);
    if (v.kind != TwistVerdict::Kind::no || *v.witness == p) continue;
    EXPECT_EQ(rotation_data(*v.witness).number, rotation_data(p).number);
    EXPECT_TRUE(forces(p, *v.witness));
  }
}
