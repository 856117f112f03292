#pragma once

// Exact integer and rational helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nagell {

// Expression templates off: values bind cleanly to overloaded helpers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int sign(const Int& x) { return x.sign(); }

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Int numer(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denom(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denom(x) == 1; }

inline Int pow(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  Rational b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Floor of the square root; throws on negative input.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

/// Floor of the k-th root of n >= 0, by integer Newton iteration.
inline Int iroot(const Int& n, unsigned k) {
  if (k == 0) throw std::domain_error("iroot with k = 0");
  if (n < 0) throw std::domain_error("iroot of negative integer");
  if (n < 2 || k == 1) return n;
  if (k == 2) return isqrt(n);
  // Start above the root: 2^(ceil(bits/k)).
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1u;
  Int x = Int(1) << ((bits + k - 1) / k);
  while (true) {
    Int y = ((k - 1) * x + n / pow(x, k - 1)) / k;
    if (y >= x) break;
    x = y;
  }
  while (pow(x, k) > n) --x;
  while (pow(x + 1, k) <= n) ++x;
  return x;
}

/// True iff n is a perfect k-th power of an integer; the root goes to *root.
/// Negative n is allowed for odd k.
inline bool is_perfect_power(const Int& n, unsigned k, Int* root = nullptr) {
  if (n < 0) {
    if (k % 2 == 0) return false;
    Int r;
    if (!is_perfect_power(-n, k, &r)) return false;
    if (root) *root = -r;
    return true;
  }
  Int r = iroot(n, k);
  if (pow(r, k) != n) return false;
  if (root) *root = r;
  return true;
}

inline bool is_square(const Int& n, Int* root = nullptr) {
  return is_perfect_power(n, 2, root);
}

/// p-adic valuation of a nonzero integer.
inline int valuation(Int n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// p-adic valuation of a nonzero rational.
inline int valuation(const Rational& x, const Int& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  const Int num = numer(x);
  const Int den = denom(x);
  int v = 0;
  if (num % p == 0) v += valuation(num, p);
  if (den % p == 0) v -= valuation(den, p);
  return v;
}

/// Nonnegative residue of x modulo m > 0.
inline Int mod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of x modulo m; throws if not invertible.
inline Int inv_mod(const Int& x, const Int& m) {
  Int a = mod(x, m), b = m;
  Int u = 1, v = 0;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = u - q * v;
    u = v;
    v = t;
  }
  if (a != 1) throw std::domain_error("inverse does not exist modulo " + m.str());
  return mod(u, m);
}

/// Residue of a p-integral rational modulo p.
inline Int mod(const Rational& x, const Int& p) {
  const Int den = denom(x);
  if (den % p == 0) throw std::domain_error("rational is not p-integral");
  return mod(numer(x) * inv_mod(den, p), p);
}

inline Int pow_mod(Int base, Int exp, const Int& m) {
  return boost::multiprecision::powm(mod(base, m), exp, m);
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  static std::mt19937 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 30, gen);
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

namespace detail {

inline Int pollard_brent(const Int& n, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 gen(seed);
  while (true) {
    Int y = Int(gen()) % n, c = Int(gen()) % n;
    if (c == 0) c = 1;
    const unsigned m = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned i = 0; i < std::min(m, static_cast<unsigned>(r - k)); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Int n, std::map<Int, int>& out, std::uint64_t seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_brent(n, seed);
  factor_into(d, out, seed + 1);
  factor_into(n / d, out, seed + 2);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0) as an ordered map prime -> exponent.
inline std::map<Int, int> factor(const Int& n) {
  if (n == 0) throw std::domain_error("factor of zero");
  std::map<Int, int> out;
  Int m = abs(n);
  for (std::int64_t p = 2; p < 10000 && Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      out[Int(p)] += 1;
      m /= p;
    }
  }
  if (m > 1) detail::factor_into(m, out, 1);
  return out;
}

/// Product of the distinct primes dividing n, skipping those listed in `skip`.
inline Int radical(const Int& n, const std::vector<Int>& skip = {}) {
  Int r = 1;
  for (const auto& [p, e] : factor(n)) {
    if (std::find(skip.begin(), skip.end(), p) == skip.end()) r *= p;
  }
  return r;
}

inline Int checked_int(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("expected an integer, got " + to_string(x));
  return numer(x);
}

}  // namespace nagell
