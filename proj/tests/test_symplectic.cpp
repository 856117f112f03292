#include "nagell/symplectic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nagell;

namespace {

// Euler's criterion, an oracle independent of the binary algorithm.
int euler(const Int& a, const Int& p) {
  const Int r = pow_mod(mod(a, p), (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

}  // namespace

TEST(Kronecker, MatchesEulerAtPrimes) {
  std::mt19937_64 rng(41);
  for (auto p : primes_up_to(2000)) {
    if (p == 2) continue;
    for (int it = 0; it < 20; ++it) {
      const Int a = Int(static_cast<long long>(rng() % 1000000)) - 500000;
      EXPECT_EQ(kronecker(a, p), euler(a, p)) << a << " " << p;
    }
  }
}

TEST(Kronecker, MultiplicativeInTheModulus) {
  for (long long m = 1; m < 60; m += 2)
    for (long long n = 1; n < 60; n += 2)
      for (long long a = -30; a < 30; ++a) EXPECT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
  EXPECT_THROW(kronecker(3, 8), std::invalid_argument);
}

TEST(ClassValue, MatchesSymbolsOnPrimes) {
  for (auto p : primes_up_to(3000)) {
    if (p < 5) continue;
    const int r = static_cast<int>(p % 24);
    for (int d : {-1, 2, -2, 3, -3, 6, -6}) EXPECT_EQ(class_value(d, r), euler(d, p)) << d << " " << p;
  }
}

TEST(SymplecticAt2, SquarefreePart) {
  EXPECT_EQ(symplectic_at_2(-6, 9).d, -6);
  EXPECT_EQ(symplectic_at_2(-6, 3).d, -2);
  EXPECT_EQ(symplectic_at_2(-6, 1).d, -6);
}

TEST(Pairs, ValuationsAtTwo) {
  std::map<std::string, int> v2;
  for (const auto& p : exceptional_pairs()) v2[p.label] = analyze_pair(p).v2_form;
  EXPECT_EQ(v2["54b1"], 3);
  EXPECT_EQ(v2["882g1"], 9);
  EXPECT_EQ(v2["882f1"], 9);
  EXPECT_EQ(v2["2646bc1"], 1);
  EXPECT_EQ(v2["2646q1"], 1);
}

TEST(Classes, Excluded) {
  EXPECT_EQ(excluded_classes(IClass::Nonzero), (std::set<int>{13, 17, 19, 23}));
  EXPECT_EQ(excluded_classes(IClass::Zero), (std::set<int>{5, 7, 13, 23}));
}

TEST(Classes, IClassOfK) {
  for (int k = 0; k < 30; ++k) EXPECT_EQ(i_class_of_k(k) == IClass::Zero, k % 3 == 1);
}
