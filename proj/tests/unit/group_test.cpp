#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "dlga/group.hpp"
#include "dlga/literals.hpp"
#include "dlga/verify.hpp"
#include "test_support.hpp"

namespace dlga {
namespace {

Generator t1(int i, Residue b, bool inv = false) { return Generator{GenKind::Type1, i, -1, b, inv}; }

class GroupTest : public ::testing::Test {
 protected:
  Group g5{test::q5()};
  Group g3{test::q3()};

  GroupElement elem(std::vector<std::int64_t> m, std::vector<std::vector<Residue>> parts) {
    return GroupElement{std::move(m), Decomposition{std::move(parts)}};
  }
};

TEST_F(GroupTest, GeneratorCounts) {
  EXPECT_EQ(g3.generators().size(), 18u);
  EXPECT_EQ(g5.generators().size(), 30u);
  EXPECT_EQ(g3.base_generators().size(), 9u);
  const Group g4(test::q5d4());
  EXPECT_EQ(g4.generators().size(), 2u * (3 * 5 + 3 * 5));
  for (const Generator& s : g5.generators()) {
    if (s.kind == GenKind::Type2) {
      EXPECT_EQ(s.i, 0);
      EXPECT_EQ(s.j, 1);
    }
  }
}

TEST_F(GroupTest, ApplyGeneratorExamples) {
  const GroupElement e = g5.identity();
  EXPECT_EQ(g5.apply(e, t1(0, 3)), elem({1, 0}, {{3}, {}, {}}));
  EXPECT_EQ(g5.apply(e, t1(0, 0)), elem({1, 0}, {{}, {}, {}}));
  EXPECT_EQ(g5.apply(elem({0, 0}, {{}, {}, {3}}), t1(0, 0)), elem({1, 0}, {{3}, {}, {}}));
}

TEST_F(GroupTest, MultiplyAndInvertExamples) {
  const GroupElement a = g5.element_of(t1(0, 3));
  const GroupElement b = g5.element_of(t1(0, 0));
  EXPECT_EQ(g5.multiply(a, g5.invert(b)), elem({0, 0}, {{}, {}, {3}}));
  EXPECT_EQ(g5.invert(b), elem({-1, 0}, {{}, {}, {}}));
  EXPECT_EQ(g5.invert(g5.identity()), g5.identity());
  EXPECT_EQ(g5.element_of(t1(0, 0, true)), g5.invert(b));
}

TEST_F(GroupTest, TreeDistanceExamples) {
  TreeMetric t = g5.tree_distance(g5.identity());
  EXPECT_EQ(t.dT, 0);
  t = g5.tree_distance(g5.element_of(t1(0, 0)));
  EXPECT_EQ(t.u, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(t.v, (std::vector<std::int64_t>{1, 0, 0}));
  EXPECT_EQ(t.dT, 2);
  t = g5.tree_distance(elem({0, 0}, {{}, {}, {3}}));
  EXPECT_EQ(t.u, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(t.v, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(t.dT, 2);
}

TEST_F(GroupTest, BallBasics) {
  const Ball b0 = g5.ball(0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_TRUE(g5.is_identity(b0.elements[0]));
  std::unordered_set<GroupElement, GroupElementHash> images;
  for (const Generator& s : g5.generators()) images.insert(g5.element_of(s));
  images.erase(g5.identity());
  EXPECT_EQ(g5.ball(1).size(), 1 + images.size());
  const Ball b2 = g5.ball(2);
  auto it = b2.index.find(elem({0, 0}, {{}, {}, {3}}));
  ASSERT_NE(it, b2.index.end());
  EXPECT_EQ(b2.length[static_cast<std::size_t>(it->second)], 2);
}

TEST_F(GroupTest, BallSizesAreStable) {
  EXPECT_EQ(g3.ball(3).size(), 1063u);
  EXPECT_EQ(g3.ball(4).size(), 5617u);
}

TEST_F(GroupTest, Axioms) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const GroupElement a = random_element(g5, rng), b = random_element(g5, rng), c = random_element(g5, rng);
    ASSERT_EQ(g5.multiply(g5.multiply(a, b), c), g5.multiply(a, g5.multiply(b, c)));
    ASSERT_EQ(g5.multiply(a, g5.identity()), a);
    ASSERT_EQ(g5.multiply(g5.identity(), a), a);
    ASSERT_TRUE(g5.is_identity(g5.multiply(a, g5.invert(a))));
    ASSERT_TRUE(g5.is_identity(g5.multiply(g5.invert(a), a)));
    ASSERT_EQ(g5.invert(g5.invert(a)), a);
  }
}

TEST_F(GroupTest, ApplyAgreesWithMultiply) {
  std::mt19937_64 rng(12);
  const auto gens = g5.generators();
  for (int k = 0; k < 1000; ++k) {
    const GroupElement a = random_element(g5, rng);
    const Generator& s = gens[rng() % gens.size()];
    ASSERT_EQ(g5.apply(a, s), g5.multiply(a, g5.element_of(s))) << to_string(s);
  }
}

TEST_F(GroupTest, TreeMetricInvariantsOnBall) {
  const Ball& b = g3.ball(4);
  for (std::size_t k = 0; k < b.size(); ++k) {
    const TreeMetric t = g3.tree_distance(b.elements[k]);
    std::int64_t balance = 0, total = 0;
    for (int n = 0; n < g3.rank(); ++n) {
      ASSERT_GE(t.u[static_cast<std::size_t>(n)], 0);
      ASSERT_GE(t.v[static_cast<std::size_t>(n)], 0);
      balance += t.v[static_cast<std::size_t>(n)] - t.u[static_cast<std::size_t>(n)];
      total += t.u[static_cast<std::size_t>(n)] + t.v[static_cast<std::size_t>(n)];
    }
    ASSERT_EQ(balance, 0);
    ASSERT_EQ(total, t.dT);
    ASSERT_LE(t.dT, 2 * b.length[k]);
    ASSERT_LE(b.length[k], 2 * t.dT);
  }
}

TEST_F(GroupTest, EvaluateWord) {
  const Word w = parse_word("t1[1,3],t1[1,0]'", g5.params());
  EXPECT_EQ(g5.evaluate(w), elem({0, 0}, {{}, {}, {3}}));
  EXPECT_TRUE(g5.is_identity(g5.evaluate(parse_word("t1[1,0],t1[1,0]'", g5.params()))));
  EXPECT_TRUE(g5.is_identity(g5.evaluate({})));
}

TEST_F(GroupTest, FullRIsAPowerTimesRPrime) {
  const GroupElement a = g5.element_of(t1(0, 3));
  const RationalForm r = g5.full_r(a);
  EXPECT_EQ(r, g5.ring().constant(3));
}

TEST_F(GroupTest, ToStringNamesGenerators) {
  EXPECT_EQ(to_string(t1(0, 3, true)), "t1[1,3]'");
  EXPECT_EQ(to_string(Generator{GenKind::Type2, 0, 1, 4, false}), "t2[1,2,4]");
}

}  // namespace
}  // namespace dlga
