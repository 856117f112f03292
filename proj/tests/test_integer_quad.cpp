#include "nagell/quad_ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nagell;

namespace {

bool trial_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Integer, PrimalityAgreesWithTrialDivision) {
  for (long long n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(Int(n)), trial_prime(n)) << n;
}

TEST(Integer, FactorReassembles) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Int n = Int(rng() % 1000000000000ULL) + 2;
    Int prod = 1;
    for (const auto& [p, e] : factor(n)) {
      EXPECT_TRUE(is_prime(p));
      prod *= pow(p, static_cast<unsigned>(e));
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(Integer, PerfectPowers) {
  for (long long r = 0; r < 60; ++r)
    for (unsigned k = 2; k < 6; ++k) {
      const Int n = pow(Int(r), k);
      Int root;
      ASSERT_TRUE(is_perfect_power(n, k, &root));
      EXPECT_EQ(root, r);
      if (r > 1) {
        EXPECT_FALSE(is_perfect_power(n + 1, k));
      }
    }
}

TEST(Integer, Valuation) {
  EXPECT_EQ(valuation(Int(2) << 17, Int(2)), 18);
  EXPECT_EQ(valuation(Rational(Int(49), Int(24)), Int(2)), -3);
  EXPECT_EQ(valuation(Int(343 * 5), Int(7)), 3);
}

TEST(QuadRing, GeneratorRelation) {
  const QuadInt w = QuadInt::pi2();
  EXPECT_EQ(w * w, w - QuadInt(2, 0));
  EXPECT_EQ(QuadInt::pi2() * QuadInt::pi2_bar(), QuadInt(2, 0));
  EXPECT_EQ(norm(w), 2);
}

TEST(QuadRing, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int it = 0; it < 1000; ++it) {
    const QuadInt x(d(rng), d(rng)), y(d(rng), d(rng));
    EXPECT_EQ(norm(x * y), norm(x) * norm(y));
    const QuadInt xc = x * conj(x);
    EXPECT_EQ(xc.v, 0);
    EXPECT_EQ(xc.u, norm(x));
  }
}

TEST(QuadRing, NormMatchesHalfCoordinates) {
  // 4 N(x) = a^2 + 7 b^2 for x = (a + b sqrt(-7))/2.
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-500, 500);
  for (int it = 0; it < 500; ++it) {
    const QuadInt x(d(rng), d(rng));
    const auto [a, b] = to_half_coords(x);
    EXPECT_EQ(4 * norm(x), a * a + 7 * b * b);
    EXPECT_EQ(from_half_coords(a, b), x);
  }
  EXPECT_THROW(from_half_coords(1, 2), std::invalid_argument);
}

TEST(QuadRing, PowerAgreesWithRepeatedProduct) {
  const QuadInt x(3, -2);
  QuadInt acc = QuadInt::one();
  for (unsigned n = 0; n < 20; ++n) {
    EXPECT_EQ(pow(x, n), acc);
    acc *= x;
  }
}
