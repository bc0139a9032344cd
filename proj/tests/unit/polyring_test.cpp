#include <gtest/gtest.h>

#include <random>

#include "dlga/polyring.hpp"
#include "dlga/verify.hpp"
#include "test_support.hpp"

namespace dlga {
namespace {

class PolyRingTest : public ::testing::Test {
 protected:
  PolyRing ring{test::q5()};

  Decomposition dec(std::vector<std::vector<Residue>> parts) { return Decomposition{std::move(parts)}; }
};

TEST_F(PolyRingTest, AdditiveIdentityAndCancellation) {
  const RationalForm x = ring.add(ring.pole_power(0, 2, 3), ring.t_power(4, 2));
  EXPECT_EQ(ring.add(x, ring.zero()), x);
  const RationalForm one = ring.mul(ring.pole_power(0, 1), ring.pole_power(0, -1));
  EXPECT_EQ(one, ring.constant(1));
  EXPECT_EQ(one.denom, (std::vector<int>{0, 0}));
}

TEST_F(PolyRingTest, CoprimeProductKeepsBothFactors) {
  const RationalForm p = ring.mul(ring.pole_power(0, 1), ring.pole_power(1, 1));
  EXPECT_EQ(p.numerator.coeffs, (std::vector<Residue>{1}));
  EXPECT_EQ(p.denom, (std::vector<int>{1, 1}));
}

TEST_F(PolyRingTest, DecomposeWorkedExamples) {
  const RationalForm x = ring.mul(ring.pole_power(0, 1), ring.pole_power(1, 1));
  EXPECT_EQ(ring.decompose(x), dec({{1}, {4}, {}}));
  EXPECT_EQ(ring.decompose(ring.zero()), Decomposition::zero(3));
  const RationalForm y = ring.add(ring.pole_power(0, 1, 3), ring.t_power(1));
  EXPECT_EQ(ring.decompose(y), dec({{3}, {}, {0, 1}}));
}

TEST_F(PolyRingTest, RecomposeExamples) {
  const RationalForm r = ring.recompose(dec({{0, 3}, {}, {}}));
  EXPECT_EQ(r.numerator.coeffs, (std::vector<Residue>{3}));
  EXPECT_EQ(r.denom, (std::vector<int>{2, 0}));
  EXPECT_EQ(ring.recompose(dec({{1}, {4}, {}})), ring.mul(ring.pole_power(0, 1), ring.pole_power(1, 1)));
}

TEST_F(PolyRingTest, SeriesExpandExamples) {
  const RationalForm x = ring.pole_power(0, 1);
  LaurentWindow w = ring.series_expand(x, 1, 2);
  EXPECT_EQ(w.min_degree, 0);
  EXPECT_EQ(w.coeffs, (std::vector<Residue>{4, 4, 4}));
  w = ring.series_expand(x, 0, 1);
  EXPECT_EQ(w.min_degree, -1);
  EXPECT_EQ(w.coeffs, (std::vector<Residue>{1, 0}));
  w = ring.series_expand(x, 2, 2);
  EXPECT_EQ(w.min_degree, 1);
  EXPECT_EQ(w.coeffs, (std::vector<Residue>{1, 4, 1}));
}

TEST_F(PolyRingTest, ShiftMultiplyExamples) {
  EXPECT_EQ(ring.shift_multiply(dec({{}, {1, 2}, {}}), 0, -1), dec({{3}, {2, 3}, {}}));
  EXPECT_EQ(ring.shift_multiply(Decomposition::zero(3), 0, -1), Decomposition::zero(3));
  EXPECT_EQ(ring.shift_multiply(Decomposition::zero(3), 1, 1), Decomposition::zero(3));
  EXPECT_EQ(ring.shift_multiply(dec({{}, {}, {3}}), 0, -1), dec({{3}, {}, {}}));
  EXPECT_EQ(ring.shift_multiply(dec({{3}, {}, {}}), 0, 1), dec({{}, {}, {3}}));
}

TEST_F(PolyRingTest, RoundTripOnRandomForms) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 1000; ++k) {
    const RationalForm x = random_rational(ring, rng, 8, 4);
    ASSERT_TRUE(ring.is_reduced(x));
    const Decomposition d = ring.decompose(x);
    ASSERT_TRUE(d.is_canonical());
    ASSERT_EQ(ring.recompose(d), x) << ring.to_string(x);
  }
}

TEST_F(PolyRingTest, DecomposeOfRecomposeIsIdentity) {
  std::mt19937_64 rng(43);
  const Group group(test::q5());
  for (int k = 0; k < 1000; ++k) {
    const Decomposition d = random_element(group, rng, 0, 5).rprime;
    ASSERT_EQ(ring.decompose(ring.recompose(d)), d) << ring.to_string(d);
  }
}

TEST_F(PolyRingTest, RingLaws) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 1000; ++k) {
    const RationalForm a = random_rational(ring, rng, 4, 2), b = random_rational(ring, rng, 4, 2),
                       c = random_rational(ring, rng, 4, 2);
    ASSERT_EQ(ring.add(a, b), ring.add(b, a));
    ASSERT_EQ(ring.mul(a, b), ring.mul(b, a));
    ASSERT_EQ(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)));
    ASSERT_EQ(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
    ASSERT_EQ(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)));
    ASSERT_TRUE(ring.sub(a, a).is_zero());
  }
}

// Geometric recurrence for simple poles and agreement with long division.
TEST_F(PolyRingTest, SeriesOracleCoherence) {
  const auto& zq = ring.zq();
  for (int r = 0; r < ring.poles(); ++r) {
    for (int s = 0; s < ring.rank(); ++s) {
      if (s == r) continue;
      for (int e = 1; e <= 4; ++e) {
        const RationalForm x = ring.pole_power(r, e);
        const LaurentWindow w = ring.series_expand(x, s, 8);
        if (s < ring.poles()) {
          EXPECT_EQ(w.min_degree, 0);
          if (e == 1) {
            const Residue ratio = zq.neg(zq.inverse(zq.sub(ring.params().l(r), ring.params().l(s))));
            for (int n = 0; n < 8; ++n) EXPECT_EQ(w.at(n + 1), zq.mul(ratio, w.at(n)));
          }
        } else {
          EXPECT_EQ(w.min_degree, e);
        }
        // Multiplying back by (t + l_r)^e expanded at the same point gives 1.
        const LaurentWindow back = ring.series_expand(ring.pole_power(r, -e), s, 8);
        for (int n = 0; n <= 6; ++n) {
          Residue acc = 0;
          for (int a = w.min_degree; a <= w.min_degree + 8; ++a) {
            int b = n - a;
            if (b < back.min_degree || b > back.min_degree + 8) continue;
            acc = zq.add(acc, zq.mul(w.at(a), back.at(b)));
          }
          EXPECT_EQ(acc, n == 0 ? 1u : 0u) << "r=" << r << " s=" << s << " e=" << e << " n=" << n;
        }
      }
    }
  }
}

// Long division of 1 by (t + l)^e in powers of 1/t.
TEST_F(PolyRingTest, ExpansionAtInfinityMatchesLongDivision) {
  const auto& zq = ring.zq();
  for (int r = 0; r < ring.poles(); ++r) {
    for (int e = 1; e <= 4; ++e) {
      ModPoly den{{1}};
      den = ring.poly_mul_linear_power(den, ring.params().l(r), e);
      // Quotient digits of 1 / den produced by the schoolbook method.
      std::vector<Residue> rem(static_cast<std::size_t>(e + 12), 0);
      rem[0] = 1;  // coefficient of t^0 scaled so index k means t^{-k}
      std::vector<Residue> quotient;
      for (int k = 0; k < 8; ++k) {
        // Next quotient term is t^{-(e+k)} with coefficient rem[k].
        const Residue c = rem[static_cast<std::size_t>(k)];
        quotient.push_back(c);
        for (int y = 0; y <= e; ++y) {
          auto idx = static_cast<std::size_t>(k + y);
          rem[idx] = zq.sub(rem[idx], zq.mul(c, den.coeffs[static_cast<std::size_t>(e - y)]));
        }
      }
      const LaurentWindow w = ring.series_expand(ring.pole_power(r, e), ring.rank() - 1, 7);
      EXPECT_EQ(w.min_degree, e);
      EXPECT_EQ(w.coeffs, quotient);
    }
  }
}

TEST_F(PolyRingTest, PolynomialHelpers) {
  const ModPoly p{{1, 2, 3}};
  EXPECT_EQ(ring.poly_eval(p, 2), (1 + 4 + 12) % 5u);
  const ModPoly shifted = ring.poly_taylor_shift(p, 1);  // p(u - 1)
  for (Residue u = 0; u < 5; ++u) EXPECT_EQ(ring.poly_eval(shifted, u), ring.poly_eval(p, ring.zq().sub(u, 1)));
  const ModPoly m = ring.poly_mul_linear_power(p, 3, 2);
  EXPECT_EQ(ring.poly_div_linear(ring.poly_div_linear(m, 3), 3), p);
  EXPECT_THROW(ring.poly_div_linear(p, 0), std::logic_error);
}

TEST_F(PolyRingTest, NonPrimeModulusStillReduces) {
  const PolyRing r9(GroupParams::validate(9, 3, std::vector<std::int64_t>{1, 2}));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    const RationalForm x = random_rational(r9, rng, 6, 3);
    ASSERT_EQ(r9.recompose(r9.decompose(x)), x);
  }
  // 3 is a zero divisor but the monic factor still cancels exactly.
  const RationalForm z = r9.mul(r9.pole_power(0, 1, 3), r9.pole_power(0, -1, 3));
  EXPECT_EQ(z, r9.zero());
}

}  // namespace
}  // namespace dlga
