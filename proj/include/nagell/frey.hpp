#pragma once

// Frey curves attached to putative solutions.
//
//   (n,n,2):  Y^2 + XY = X^3 + (a-1)/4 X^2 + b^n/64 X         a^2 + 7^(2k+1) = b^n
//   (2,3,n):  Y^2 = X^3 + 3*7^(l'+i) X + (-1)^(i+1) 2*7^i a   2k+1 = 3l' + i
//   eqB:      Y^2 + XY = X^3 + (7a-1)/4 X^2 + 7 b^n/64 X      7a^2 + 1 = b^n

#include "nagell/elliptic.hpp"
#include "nagell/integer.hpp"

#include <optional>
#include <string>

namespace nagell {

enum class Signature { NN2, S23N, EqB };

inline std::string to_string(Signature s) {
  switch (s) {
    case Signature::NN2: return "(n,n,2)";
    case Signature::S23N: return "(2,3,n)";
    case Signature::EqB: return "eqB";
  }
  return "?";
}

struct FreyInstance {
  Signature signature;
  Int a, bn;
  int k = 0;
  int n = 0;
  int lambda_p = 0;
  int i = 0;
  WeierstrassCurve curve;
};

inline Int seven_pow(int e) { return pow(Int(7), static_cast<unsigned>(e)); }

/// Requires a odd, 2^6 | bn and a^2 + 7^(2k+1) = bn; a is negated to be 1 mod 4.
inline FreyInstance frey_nn2(Int a, const Int& bn, int k, int n) {
  if (k < 0) throw std::invalid_argument("frey_nn2: k must be nonnegative");
  if (a % 2 == 0) throw std::invalid_argument("frey_nn2: a must be odd");
  if (mod(bn, Int(64)) != 0) throw std::invalid_argument("frey_nn2: 2^6 must divide b^n");
  if (a * a + seven_pow(2 * k + 1) != bn) throw std::invalid_argument("frey_nn2: a^2 + 7^(2k+1) != b^n");
  if (mod(a, Int(4)) == 3) a = -a;
  WeierstrassCurve e(1, Rational((a - 1) / 4), 0, Rational(bn / 64), 0);
  return {Signature::NN2, a, bn, k, n, 0, 0, e};
}

/// Requires 2 and 7 not dividing a, and 3 not dividing a; a is negated to
/// be 1 mod 4. b^n is a^2 + 7^(2k+1).
inline FreyInstance frey_23n(Int a, int k, int n = 0) {
  if (k < 0) throw std::invalid_argument("frey_23n: k must be nonnegative");
  if (a % 2 == 0) throw std::invalid_argument("frey_23n: a must be odd");
  if (a % 3 == 0) throw std::invalid_argument("frey_23n: 3 divides a");
  if (a % 7 == 0) throw std::invalid_argument("frey_23n: 7 divides a");
  if (mod(a, Int(4)) == 3) a = -a;
  const int e = 2 * k + 1;
  const int lp = e / 3, i = e % 3;
  const Int A = 3 * seven_pow(lp + i);
  const Int B = (i % 2 == 0 ? -2 : 2) * seven_pow(i) * a;
  WeierstrassCurve c(0, 0, 0, Rational(A), Rational(B));
  return {Signature::S23N, a, a * a + seven_pow(e), k, n, lp, i, c};
}

/// Requires 2^6 | bn and 7a^2 + 1 = bn; a is negated to be 3 mod 4.
inline FreyInstance frey_eqB(Int a, const Int& bn, int n) {
  if (a % 2 == 0) throw std::invalid_argument("frey_eqB: a must be odd");
  if (mod(bn, Int(64)) != 0) throw std::invalid_argument("frey_eqB: 2^6 must divide b^n");
  if (7 * a * a + 1 != bn) throw std::invalid_argument("frey_eqB: 7a^2 + 1 != b^n");
  if (mod(a, Int(4)) == 1) a = -a;
  WeierstrassCurve e(1, Rational((7 * a - 1) / 4), 0, Rational(7 * bn / 64), 0);
  return {Signature::EqB, a, bn, 0, n, 0, 0, e};
}

/// Conductor exponent of the (2,3,n) curve at 3.
inline int epsilon3(const FreyInstance& f) { return tate(f.curve, 3).f; }

/// A small (2,3,n) instance with the requested i and conductor exponent at 3,
/// with 2^11 | a^2 + 7^(2k+1) as for a solution with b even and n >= 11.
/// Used as a stand-in for the local behaviour at 2, 3 and 7, which depends
/// only on (i, eps3) there.
inline std::optional<FreyInstance> representative_23n(int i, int eps3, long long a_max = 200000) {
  for (int k = 0; k < 3; ++k) {
    if ((2 * k + 1) % 3 != i) continue;
    const Int s7 = seven_pow(2 * k + 1);
    for (long long a = 1; a <= a_max; a += 4) {
      if (a % 3 == 0 || a % 7 == 0) continue;
      if (mod(Int(a) * a + s7, Int(2048)) != 0) continue;
      FreyInstance f = frey_23n(Int(a), k);
      if (epsilon3(f) == eps3) return f;
    }
  }
  return std::nullopt;
}

}  // namespace nagell
