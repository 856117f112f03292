#include "nagell/binary_forms.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nagell;

TEST(FormPair, ListedThueMahlerForms) {
  EXPECT_EQ(form_pair(3, 0).imag2, BinaryForm({0, 3, 3, -1}));
  EXPECT_EQ(divide_exact(form_pair(3, 1).imag2, 2), BinaryForm({1, 3, -3, -3}));
  EXPECT_EQ(form_pair(5, 0).imag2, BinaryForm({0, 5, 10, -10, -15, -1}));
  EXPECT_EQ(divide_exact(form_pair(5, 1).imag2, 2), BinaryForm({-1, -15, -10, 50, 35, -3}));
}

TEST(FormPair, EvaluatesTheRingPower) {
  // Evaluate alpha^e (u + v w)^n numerically in Z[w] and compare.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int n = 2; n <= 9; ++n)
    for (int e = 0; e <= 1; ++e) {
      const FormPair fp = form_pair(n, e);
      for (int it = 0; it < 20; ++it) {
        const Int u = d(rng), v = d(rng);
        QuadInt z = pow(QuadInt(u, v), static_cast<unsigned>(n));
        if (e) z = twist_alpha(n) * z;
        const auto [re2, im2] = to_half_coords(z);
        EXPECT_EQ(fp.real2(u, v), re2);
        EXPECT_EQ(fp.imag2(u, v), im2);
      }
    }
}

TEST(FormPair, NormIdentity) {
  // real2^2 + 7 imag2^2 = 4 N(alpha)^e N(u + v w)^n, with N(alpha) = 2^n.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int n = 3; n <= 7; ++n)
    for (int e = 0; e <= 1; ++e) {
      const FormPair fp = form_pair(n, e);
      for (int it = 0; it < 30; ++it) {
        const Int u = d(rng), v = d(rng);
        const Int r = fp.real2(u, v), i = fp.imag2(u, v);
        const Int nu = u * u + u * v + 2 * v * v;
        const Int na = e ? pow(Int(2), static_cast<unsigned>(n)) : Int(1);
        EXPECT_EQ(r * r + 7 * i * i, 4 * na * pow(nu, static_cast<unsigned>(n)));
      }
    }
}

TEST(Resultant, ProductOfRootDifferences) {
  // f = (x - r1 y)(x - r2 y)(x - r3 y), g = (x - s1 y)(x - s2 y): |Res| = prod |r_i - s_j|.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int it = 0; it < 50; ++it) {
    const std::vector<Int> r = {d(rng), d(rng), d(rng)}, s = {d(rng), d(rng)};
    // Coefficients in descending powers of x, built by expanding the product.
    auto expand = [](const std::vector<Int>& roots) {
      std::vector<Int> c = {1};
      for (const auto& root : roots) {
        std::vector<Int> next(c.size() + 1, Int(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
          next[k] += c[k];
          next[k + 1] -= root * c[k];
        }
        c = next;
      }
      return BinaryForm(c);
    };
    const BinaryForm f = expand(r), g = expand(s);
    Int want = 1;
    for (const auto& a : r)
      for (const auto& b : s) want *= a - b;
    EXPECT_EQ(abs(resultant(f, g, Eliminate::U)), abs(want));
    EXPECT_EQ(abs(resultant(f, g, Eliminate::V)), abs(want));
  }
}

TEST(Resultant, X013Pair) {
  const Int want = -Int(4) * 9 * 121 * 23;
  EXPECT_EQ(resultant(x013_h1(), x013_h2(), Eliminate::U), want);
  EXPECT_EQ(resultant(x013_h1(), x013_h2(), Eliminate::V), want);
}

TEST(BinaryForm, DivideExactRejectsRemainders) {
  EXPECT_THROW(divide_exact(BinaryForm({2, 3}), 2), std::invalid_argument);
}
