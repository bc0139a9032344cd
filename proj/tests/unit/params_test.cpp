#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dlga/params.hpp"
#include "test_support.hpp"

namespace dlga {
namespace {

ParamsErrc code_of(std::int64_t q, int d, std::vector<std::int64_t> l) {
  try {
    GroupParams::validate(q, d, l);
  } catch (const ParamsError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a ParamsError";
  return ParamsErrc::RankTooSmall;
}

TEST(Params, StockConfigurationsAreValid) {
  EXPECT_NO_THROW(test::q3());
  EXPECT_NO_THROW(test::q5());
  EXPECT_NO_THROW(test::q5d4());
}

TEST(Params, ErrorsNameTheViolatedCondition) {
  EXPECT_EQ(code_of(4, 3, {1, 2}), ParamsErrc::RankTooLargeForModulus);
  EXPECT_EQ(code_of(5, 2, {1}), ParamsErrc::RankTooSmall);
  EXPECT_EQ(code_of(5, 3, {1}), ParamsErrc::LengthMismatch);
  EXPECT_EQ(code_of(1, 3, {1, 2}), ParamsErrc::ModulusOutOfRange);
  EXPECT_EQ(code_of(5, 3, {1, 6}), ParamsErrc::DuplicateL);
  EXPECT_EQ(code_of(5, 3, {0, 2}), ParamsErrc::NonUnitL);
  EXPECT_EQ(code_of(25, 3, {1, 6}), ParamsErrc::NonUnitDifference);
  EXPECT_EQ(code_of(7, 3, {3, 3}), ParamsErrc::DuplicateL);
  EXPECT_EQ(code_of(3, 4, {1, 2, 0}), ParamsErrc::RankTooLargeForModulus);
}

TEST(Params, MessageCarriesCodeName) {
  try {
    GroupParams::validate(4, 3, std::vector<std::int64_t>{1, 2});
    FAIL();
  } catch (const ParamsError& e) {
    EXPECT_NE(std::string(e.what()).find("RankTooLargeForModulus"), std::string::npos);
  }
}

TEST(Params, LValuesAreReduced) {
  const auto p = GroupParams::validate(5, 3, std::vector<std::int64_t>{6, -3});
  EXPECT_EQ(p.l(0), 1u);
  EXPECT_EQ(p.l(1), 2u);
}

TEST(Params, UnitInverse) {
  const auto p5 = test::q5();
  EXPECT_EQ(unit_inverse(4, p5), 4u);
  EXPECT_EQ(unit_inverse(1, p5), 1u);
  const auto p = GroupParams::validate(7, 3, std::vector<std::int64_t>{1, 2});
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(p.ring().mul(a, unit_inverse(a, p)), 1u);
  EXPECT_THROW(ModRing(4).inverse(2), NonUnit);
}

TEST(Params, MultOrder) {
  const auto p5 = test::q5();
  EXPECT_EQ(mult_order(4, p5), 2u);
  EXPECT_EQ(mult_order(1, p5), 1u);
  EXPECT_EQ(mult_order(2, p5), 4u);
  EXPECT_THROW(mult_order(0, p5), NonUnit);
}

TEST(Params, MultOrderDividesUnitGroupOrder) {
  for (std::int64_t q : {5, 7, 9, 11, 25, 49}) {
    const auto p = GroupParams::validate(q, 3, std::vector<std::int64_t>{1, 2});
    for (Residue a = 1; a < static_cast<Residue>(q); ++a) {
      if (!p.ring().is_unit(a)) continue;
      EXPECT_EQ(euler_phi(static_cast<std::uint32_t>(q)) % mult_order(a, p), 0u) << q << " " << a;
    }
  }
}

TEST(Params, RingMatchesIntegerArithmetic) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 5u, 12u, 65536u}) {
    ModRing zq(q);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    for (int k = 0; k < 200; ++k) {
      std::int64_t a = dist(rng), b = dist(rng);
      Residue ra = zq.reduce(a), rb = zq.reduce(b);
      auto ref = [&](std::int64_t v) { return static_cast<Residue>(((v % q) + q) % q); };
      EXPECT_EQ(zq.add(ra, rb), ref(a + b));
      EXPECT_EQ(zq.sub(ra, rb), ref(a - b));
      EXPECT_EQ(zq.mul(ra, rb), ref((a % q) * (b % q)));
      EXPECT_EQ(zq.add(ra, zq.neg(ra)), 0u);
    }
  }
}

TEST(Params, PowHandlesNegativeExponents) {
  ModRing zq(7);
  EXPECT_EQ(zq.pow(3, 0), 1u);
  EXPECT_EQ(zq.pow(3, 6), 1u);
  EXPECT_EQ(zq.mul(zq.pow(3, -2), zq.pow(3, 2)), 1u);
}

}  // namespace
}  // namespace dlga
