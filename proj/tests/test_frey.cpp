#include "nagell/frey.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nagell;

namespace {

Int random_odd(std::mt19937_64& rng) { return Int(static_cast<long long>(rng() % 2000000) * 2 + 1); }

}  // namespace

TEST(FreyNN2, Example181) {
  const FreyInstance f = frey_nn2(181, Int(1) << 15, 0, 5);
  EXPECT_EQ(f.curve.a2(), 45);
  EXPECT_EQ(f.curve.a4(), 512);
  EXPECT_EQ(f.curve.disc(), -7 * Rational(Int(1) << 18));
  EXPECT_EQ(conductor(f.curve), 14);
}

TEST(FreyNN2, ClosedFormsOnRandomParameters) {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 100) {
    const int k = static_cast<int>(rng() % 6);
    const Int a = random_odd(rng), s = seven_pow(2 * k + 1), bn = a * a + s;
    if (mod(bn, Int(64)) != 0) continue;
    const FreyInstance f = frey_nn2(a, bn, k, 0);
    EXPECT_EQ(mod(f.a, Int(4)), 1);
    EXPECT_EQ(f.curve.disc(), -Rational(s * bn * bn) / 4096);
    EXPECT_EQ(f.curve.j(), 64 * Rational(pow(-4 * a * a + 3 * bn, 3)) / Rational(s * bn * bn));
    EXPECT_EQ(1728 * f.curve.disc(), pow(f.curve.c4(), 3) - pow(f.curve.c6(), 2));
    // x -> -x gives the same curve.
    EXPECT_EQ(frey_nn2(-a, bn, k, 0).curve.a(), f.curve.a());
    ++done;
  }
}

TEST(Frey23n, Example13) {
  const FreyInstance f = frey_23n(13, 1);
  EXPECT_EQ(f.i, 0);
  EXPECT_EQ(f.lambda_p, 1);
  EXPECT_EQ(f.curve.a4(), 21);
  EXPECT_EQ(f.curve.a6(), -26);
  EXPECT_EQ(f.curve.disc(), -Rational(64 * 27 * 512));
  EXPECT_THROW(frey_23n(9, 0), std::invalid_argument);
}

TEST(Frey23n, ClosedFormsAfterRescaling) {
  std::mt19937_64 rng(22);
  int done = 0;
  while (done < 100) {
    const int k = static_cast<int>(rng() % 8);
    const Int a0 = random_odd(rng);
    if (a0 % 3 == 0 || a0 % 7 == 0) continue;
    const FreyInstance f = frey_23n(a0, k);
    const Int a = f.a;
    const int lp = f.lambda_p, i = f.i;
    EXPECT_EQ(3 * lp + i, 2 * k + 1);
    EXPECT_EQ(std::abs(lp - i) % 2, 1);
    const Rational u4 = 16, u6 = 64, u12 = 4096;
    EXPECT_EQ(f.curve.c4() / u4, -9 * Rational(seven_pow(lp + i)));
    EXPECT_EQ(f.curve.c6() / u6, Rational((i % 2 ? -1 : 1) * 27 * seven_pow(i) * a));
    EXPECT_EQ(f.curve.disc() / u12, -Rational(27 * seven_pow(2 * i) * f.bn) / 64);
    EXPECT_EQ(f.curve.j(), Rational(64 * 27 * seven_pow(2 * k + 1)) / Rational(f.bn));
    ++done;
  }
}

TEST(FreyEqB, ClosedFormsOnRandomParameters) {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 100) {
    const Int a = random_odd(rng), bn = 7 * a * a + 1;
    if (mod(bn, Int(64)) != 0) continue;
    const FreyInstance f = frey_eqB(a, bn, 0);
    EXPECT_EQ(mod(f.a, Int(4)), 3);
    EXPECT_EQ(f.curve.disc(), -Rational(343 * bn * bn) / 4096);
    EXPECT_EQ(f.curve.j(), -64 * Rational(pow(7 * a * a - 3, 3)) / Rational(bn * bn));
    ++done;
  }
}

TEST(FreyEqB, Example3) {
  const FreyInstance f = frey_eqB(3, 64, 3);
  EXPECT_EQ(f.curve.a(), WeierstrassCurve(1, 5, 0, 7, 0).a());
  EXPECT_EQ(f.curve.disc(), -343);
  EXPECT_EQ(frey_eqB(-3, 64, 3).curve.a(), f.curve.a());
}

TEST(Frey, RejectsInvalidInput) {
  EXPECT_THROW(frey_nn2(2, 64, 0, 3), std::invalid_argument);
  EXPECT_THROW(frey_nn2(181, 32768 + 64, 0, 5), std::invalid_argument);
  EXPECT_THROW(frey_eqB(5, 176, 0), std::invalid_argument);
}

TEST(Representative, ProfilesExist) {
  for (auto [i, e3] : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    const auto r = representative_23n(i, e3);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->i, i);
    EXPECT_EQ(epsilon3(*r), e3);
    EXPECT_TRUE(tate(r->curve, 2).multiplicative());
  }
}
