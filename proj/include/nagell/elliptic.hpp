#pragma once

// Weierstrass curves over Q: invariants, coordinate changes, Tate's
// algorithm, conductors, traces of Frobenius and inertia orders.

#include "nagell/integer.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nagell {

class WeierstrassCurve {
 public:
  using Coeffs = std::array<Rational, 5>;

  WeierstrassCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
      : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    if (disc() == 0) throw std::domain_error("singular Weierstrass model");
  }
  explicit WeierstrassCurve(const Coeffs& a) : WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]) {}
  static WeierstrassCurve from_ints(long long a1, long long a2, long long a3, long long a4, long long a6) {
    return WeierstrassCurve(a1, a2, a3, a4, a6);
  }

  const Coeffs& a() const { return a_; }
  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }

  Rational b2() const { return a1() * a1() + 4 * a2(); }
  Rational b4() const { return 2 * a4() + a1() * a3(); }
  Rational b6() const { return a3() * a3() + 4 * a6(); }
  Rational b8() const {
    return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
  }
  Rational c4() const { return b2() * b2() - 24 * b4(); }
  Rational c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  Rational disc() const {
    const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }
  Rational j() const {
    const Rational C4 = c4();
    return C4 * C4 * C4 / disc();
  }

  /// Model after x = x' + r, y = y' + s x' + t.
  WeierstrassCurve rst(const Rational& r, const Rational& s, const Rational& t) const {
    return WeierstrassCurve(a1() + 2 * s,                                                   //
                            a2() - s * a1() + 3 * r - s * s,                                //
                            a3() + r * a1() + 2 * t,                                        //
                            a4() - s * a3() + 2 * r * a2() - (t + r * s) * a1() + 3 * r * r - 2 * s * t,
                            a6() + r * a4() + r * r * a2() + r * r * r - t * a3() - t * t - r * t * a1());
  }

  /// Model after x = u^2 x', y = u^3 y': a_i becomes a_i / u^i.
  WeierstrassCurve scaled(const Rational& u) const {
    Rational p = u;
    Coeffs out;
    const int w[5] = {1, 2, 3, 4, 6};
    for (int i = 0; i < 5; ++i) out[static_cast<std::size_t>(i)] = a_[static_cast<std::size_t>(i)] / pow(p, static_cast<unsigned>(w[i]));
    return WeierstrassCurve(out);
  }

  bool is_integral() const {
    for (const auto& x : a_)
      if (!nagell::is_integer(x)) return false;
    return true;
  }

  /// An isomorphic model with integer coefficients (scaling by the lcm of
  /// the denominators).
  WeierstrassCurve integral_model() const {
    Int d = 1;
    for (const auto& x : a_) d = lcm(d, denom(x));
    if (d == 1) return *this;
    return scaled(Rational(1) / Rational(d));
  }

  std::array<Int, 5> int_coeffs() const {
    std::array<Int, 5> out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = checked_int(a_[i]);
    return out;
  }

  friend bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y) { return x.a_ == y.a_; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + to_string(a_[i]);
    return s + "]";
  }

 private:
  Coeffs a_;
};

inline std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e) { return os << e.str(); }

struct Invariants {
  Rational b2, b4, b6, b8, c4, c6, disc, j;
};

inline Invariants invariants(const WeierstrassCurve& e) {
  return {e.b2(), e.b4(), e.b6(), e.b8(), e.c4(), e.c6(), e.disc(), e.j()};
}

// ---------------------------------------------------------------------------
// Tate's algorithm

struct Kodaira {
  enum Kind { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };
  Kind kind = I0;
  int m = 0;

  std::string str() const {
    switch (kind) {
      case I0: return "I0";
      case In: return "I" + std::to_string(m);
      case II: return "II";
      case III: return "III";
      case IV: return "IV";
      case I0s: return "I0*";
      case Ins: return "I" + std::to_string(m) + "*";
      case IVs: return "IV*";
      case IIIs: return "III*";
      case IIs: return "II*";
    }
    return "?";
  }
  friend bool operator==(const Kodaira& x, const Kodaira& y) { return x.kind == y.kind && x.m == y.m; }
};

struct LocalData {
  Int p;
  Kodaira kodaira;
  int f = 0;
  int vp_delta_min = 0;
  /// Empty when the invariant vanishes.
  std::optional<int> vp_c4_min, vp_c6_min;
  /// Number of divisions by p performed to reach the minimal model.
  int shift = 0;
  /// Prime-to-p part of the minimal discriminant, reduced mod p.
  Int delta_unit_mod_p;
  /// A p-minimal integral model.
  std::array<Int, 5> minimal;

  bool good() const { return f == 0; }
  bool multiplicative() const { return f == 1; }
  bool additive() const { return f >= 2; }
};

namespace detail {

struct IntModel {
  Int a1, a2, a3, a4, a6;
  Int b2() const { return a1 * a1 + 4 * a2; }
  Int b4() const { return 2 * a4 + a1 * a3; }
  Int b6() const { return a3 * a3 + 4 * a6; }
  Int b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  Int c4() const { return b2() * b2() - 24 * b4(); }
  Int c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  Int disc() const {
    const Int B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }
  void rst(const Int& r, const Int& s, const Int& t) {
    IntModel n;
    n.a1 = a1 + 2 * s;
    n.a2 = a2 - s * a1 + 3 * r - s * s;
    n.a3 = a3 + r * a1 + 2 * t;
    n.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    n.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    *this = n;
  }
};

inline int val(const Int& x, const Int& p) { return x == 0 ? 1 << 20 : valuation(x, p); }

}  // namespace detail

/// Tate's algorithm at the prime p, on any model of the curve.
inline LocalData tate(const WeierstrassCurve& curve, const Int& p_in) {
  if (!is_prime(p_in)) throw std::invalid_argument("tate: p must be prime");
  const Int p = p_in;
  const auto ai = curve.integral_model().int_coeffs();
  detail::IntModel c{ai[0], ai[1], ai[2], ai[3], ai[4]};
  const bool p2 = p == 2, p3 = p == 3;
  const Int pi2 = p * p, pi3 = pi2 * p, pi4 = pi3 * p;
  auto v = [&](const Int& x) { return detail::val(x, p); };
  auto pdiv = [&](const Int& x) { return x % p == 0; };
  auto red = [&](const Int& x) { return mod(x, p); };
  auto inv = [&](const Int& x) { return inv_mod(x, p); };
  // In characteristic 2 and 3 the Frobenius is the identity on F_p, so
  // square roots (resp. cube roots) of residues are the residues themselves.
  auto root = [&](const Int& x) { return red(x); };
  const Int half = p2 ? Int(0) : inv(Int(2));

  LocalData out;
  out.p = p;
  int shift = 0;
  while (true) {
    const Int delta = c.disc();
    const int vpd = v(delta);
    auto finish = [&](Kodaira k, int f) {
      out.kodaira = k;
      out.f = f;
      out.vp_delta_min = vpd;
      const Int c4 = c.c4(), c6 = c.c6();
      if (c4 != 0) out.vp_c4_min = v(c4);
      if (c6 != 0) out.vp_c6_min = v(c6);
      out.shift = shift;
      out.delta_unit_mod_p = red(delta / pow(p, static_cast<unsigned>(vpd)));
      out.minimal = {c.a1, c.a2, c.a3, c.a4, c.a6};
      return out;
    };
    if (vpd == 0) return finish({Kodaira::I0, 0}, 0);
    if (!pdiv(c.c4())) return finish({Kodaira::In, vpd}, 1);

    // Move the singular point to (0, 0).
    Int r, t;
    {
      const Int b2 = c.b2(), b4 = c.b4(), b6 = c.b6();
      if (p2) {
        if (pdiv(b2)) {
          r = root(c.a4);
          t = root(((r + c.a2) * r + c.a4) * r + c.a6);
        } else {
          const Int ia1 = inv(c.a1);
          r = ia1 * c.a3;
          t = ia1 * (c.a4 + r * r);
        }
      } else if (p3) {
        r = pdiv(b2) ? root(-b6) : Int(-inv(b2) * b4);
        t = c.a1 * r + c.a3;
      } else {
        const Int c4 = c.c4(), c6 = c.c6();
        r = pdiv(c4) ? Int(-inv(Int(12)) * b2) : Int(-inv(12 * c4) * (c6 + b2 * c4));
        t = -half * (c.a1 * r + c.a3);
      }
      c.rst(red(r), 0, red(t));
    }

    if (v(c.a6) < 2) return finish({Kodaira::II, 0}, vpd);
    if (v(c.b8()) < 3) return finish({Kodaira::III, 0}, vpd - 1);
    if (v(c.b6()) < 3) return finish({Kodaira::IV, 0}, vpd - 2);

    // Now p | a1, a2; p^2 | a3, a4; p^3 | a6.
    {
      Int s;
      if (p2) {
        s = root(c.a2);
        t = p * root(c.a6 / pi2);
      } else if (p3) {
        s = c.a1;
        t = c.a3;
      } else {
        s = -c.a1 * half;
        t = -c.a3 * half;
      }
      c.rst(0, s, t);
    }

    const Int b = c.a2 / p, cc = c.a4 / pi2, d = c.a6 / pi3;
    const Int w = 27 * d * d - b * b * cc * cc + 4 * b * b * b * d - 18 * b * cc * d + 4 * cc * cc * cc;
    const Int x = 3 * cc - b * b;
    const int sw = pdiv(w) ? (pdiv(x) ? 3 : 2) : 1;

    if (sw == 1) return finish({Kodaira::I0s, 0}, vpd - 4);

    if (sw == 2) {
      // Move the double root of T^3 + b T^2 + c T + d to T = 0.
      Int rr;
      if (p2) rr = root(cc);
      else if (p3) rr = cc * inv(b);
      else rr = (b * cc - 9 * d) * inv(2 * x);
      c.rst(p * red(rr), 0, 0);
      int ix = 3, iy = 3;
      Int mx = pi2, my = pi2;
      while (true) {
        Int a2t = c.a2 / p, a3t = c.a3 / my, a4t = c.a4 / (p * mx), a6t = c.a6 / (mx * my);
        if (!pdiv(a3t * a3t + 4 * a6t)) break;
        Int tt = p2 ? Int(my * root(a6t)) : Int(my * red(-a3t * half));
        c.rst(0, 0, tt);
        my *= p;
        ++iy;
        a2t = c.a2 / p;
        a3t = c.a3 / my;
        a4t = c.a4 / (p * mx);
        a6t = c.a6 / (mx * my);
        if (!pdiv(a4t * a4t - 4 * a6t * a2t)) break;
        Int r2 = p2 ? Int(mx * root(a6t * inv(a2t))) : Int(mx * red(-a4t * inv(2 * a2t)));
        c.rst(r2, 0, 0);
        mx *= p;
        ++ix;
      }
      return finish({Kodaira::Ins, ix + iy - 5}, vpd - ix - iy + 1);
    }

    // Triple root: move it to T = 0.
    {
      Int rr;
      if (p2) rr = b;
      else if (p3) rr = root(-d);
      else rr = -b * inv(Int(3));
      c.rst(p * red(rr), 0, 0);
    }
    const Int a3t = c.a3 / pi2, a6t = c.a6 / pi4;
    if (!pdiv(a3t * a3t + 4 * a6t)) return finish({Kodaira::IVs, 0}, vpd - 6);
    {
      Int tt = p2 ? Int(-pi2 * root(a6t)) : Int(pi2 * red(-a3t * half));
      c.rst(0, 0, tt);
    }
    if (v(c.a4) < 4) return finish({Kodaira::IIIs, 0}, vpd - 7);
    if (v(c.a6) < 6) return finish({Kodaira::IIs, 0}, vpd - 8);

    // Not minimal: divide and start over.
    c.a1 /= p;
    c.a2 /= pi2;
    c.a3 /= pi3;
    c.a4 /= pi4;
    c.a6 /= pi4 * pi2;
    ++shift;
  }
}

/// Primes dividing the discriminant of an integral model.
inline std::vector<Int> bad_primes(const WeierstrassCurve& e) {
  std::vector<Int> out;
  for (const auto& [p, k] : factor(checked_int(e.integral_model().disc()))) out.push_back(p);
  return out;
}

inline Int conductor(const WeierstrassCurve& e) {
  Int n = 1;
  for (const auto& p : bad_primes(e)) n *= pow(p, static_cast<unsigned>(tate(e, p).f));
  return n;
}

// ---------------------------------------------------------------------------
// Reduction mod l and traces of Frobenius

using ModCoeffs = std::array<std::int64_t, 5>;

inline std::int64_t mod64(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

/// Discriminant of a model with coefficients mod p, reduced mod p.
inline std::int64_t disc_mod(const ModCoeffs& a, std::int64_t p) {
  auto m = [p](std::int64_t x) { return mod64(x, p); };
  const std::int64_t a1 = m(a[0]), a2 = m(a[1]), a3 = m(a[2]), a4 = m(a[3]), a6 = m(a[4]);
  const std::int64_t b2 = m(a1 * a1 + 4 * a2), b4 = m(2 * a4 + a1 * a3), b6 = m(a3 * a3 + 4 * a6);
  const std::int64_t b8 = m(m(m(a1 * a1) * a6) + m(4 * a2 * a6) - m(m(a1 * a3) * a4) + m(m(a2 * a3) * a3) - m(a4 * a4));
  std::int64_t d = -m(m(b2 * b2) * b8) - m(8 * m(m(b4 * b4) * b4)) - m(27 * m(b6 * b6)) + m(9 * m(m(b2 * b4) * b6));
  return m(d);
}

/// l + 1 - #E(F_l) for a model with coefficients mod l, nonsingular mod l.
inline std::int64_t ap_mod(const ModCoeffs& a, std::int64_t p) {
  if (disc_mod(a, p) == 0) throw std::domain_error("model is singular mod " + std::to_string(p));
  auto m = [p](std::int64_t x) { return mod64(x, p); };
  if (p == 2) {
    ModCoeffs r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = m(a[i]);
    std::int64_t count = 1;
    for (std::int64_t x = 0; x < 2; ++x)
      for (std::int64_t y = 0; y < 2; ++y) {
        std::int64_t lhs = y * y + r[0] * x * y + r[2] * y;
        std::int64_t rhs = x * x * x + r[1] * x * x + r[3] * x + r[4];
        if (m(lhs - rhs) == 0) ++count;
      }
    return p + 1 - count;
  }
  const std::int64_t a1 = m(a[0]), a2 = m(a[1]), a3 = m(a[2]), a4 = m(a[3]), a6 = m(a[4]);
  const std::int64_t b2 = m(a1 * a1 + 4 * a2), b4 = m(2 * a4 + a1 * a3), b6 = m(a3 * a3 + 4 * a6);
  std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y < p; ++y) chi[static_cast<std::size_t>(m(y * y))] = 1;
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t g = m(m(m(4 * x + b2) * x + 2 * b4) * x + b6);
    sum += chi[static_cast<std::size_t>(g)];
  }
  return -sum;
}

inline ModCoeffs reduce_coeffs(const std::array<Int, 5>& a, std::int64_t p) {
  ModCoeffs out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = static_cast<std::int64_t>(mod(a[i], Int(p)));
  return out;
}

/// Trace of Frobenius at a prime of good reduction.
inline std::int64_t ap(const WeierstrassCurve& e, std::int64_t l) {
  LocalData ld = tate(e, Int(l));
  if (!ld.good()) throw std::domain_error("bad reduction at " + std::to_string(l));
  return ap_mod(reduce_coeffs(ld.minimal, l), l);
}

// ---------------------------------------------------------------------------
// Inertia

struct InertiaOrder {
  /// v_p(j) < 0: the image of inertia contains an element of order n.
  bool potentially_multiplicative = false;
  int order = 0;
};

class UncalibratedInertia : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Order of the image of inertia at p >= 3 in the mod-n representation
/// (n >= 3 prime to p), for potentially good reduction. At p = 3 the tame
/// case follows the 12 / gcd rule; wild cases come from a small table.
inline InertiaOrder inertia_order(const WeierstrassCurve& e, const Int& p) {
  if (p < 3) throw std::invalid_argument("inertia_order: p must be at least 3");
  const Rational j = e.j();
  if (j != 0 && valuation(j, p) < 0) return {true, 0};
  const LocalData ld = tate(e, p);
  if (ld.good()) return {false, 1};
  const int d = ld.vp_delta_min;
  const int g = static_cast<int>(std::gcd(12, d));
  if (p > 3 || ld.f == 2) return {false, 12 / g};
  struct Entry {
    Kodaira::Kind kind;
    int vd, vc6, order;
  };
  static const Entry table[] = {
      {Kodaira::II, 3, 3, 12},
  };
  const int vc6 = ld.vp_c6_min.value_or(-1);
  for (const auto& t : table)
    if (t.kind == ld.kodaira.kind && t.vd == d && t.vc6 == vc6) return {false, t.order};
  throw UncalibratedInertia("no inertia entry for type " + ld.kodaira.str() + ", v3(disc)=" + std::to_string(d) +
                            ", v3(c6)=" + std::to_string(vc6));
}

}  // namespace nagell
