#pragma once

// Elementary side of the problem x^2 + 7^(2k+1) = y^n: reduction to the
// primitive equations, box enumeration of Thue and Thue-Mahler equations,
// direct searches and the algebraic families.

#include "nagell/binary_forms.hpp"
#include "nagell/integer.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace nagell {

// ---------------------------------------------------------------------------
// Reduction to primitive solutions

enum class Flavor { EqA, EqB };

/// A primitive solution. EqA: x^2 + 7^(2k+1) = y^n. EqB: 7 x^2 + 1 = y^n (k unused).
struct Primitive {
  Flavor flavor = Flavor::EqA;
  Int x, y;
  int k = 0;
  int n = 0;
  /// Exponents of 7 removed from x and y.
  int t = 0, s = 0;

  friend bool operator==(const Primitive& a, const Primitive& b) {
    return a.flavor == b.flavor && a.x == b.x && a.y == b.y && a.k == b.k && a.n == b.n;
  }
};

inline bool holds_eqA(const Int& x, const Int& y, int k, int n) {
  return x * x + pow(Int(7), static_cast<unsigned>(2 * k + 1)) == pow(y, static_cast<unsigned>(n));
}

inline bool holds_eqB(const Int& x, const Int& y, int n) {
  return 7 * x * x + 1 == pow(y, static_cast<unsigned>(n));
}

/// Write a solution of x^2 + 7^(2k+1) = y^n (x != 0, n >= 3) in terms of a
/// primitive solution of one of the two reduced equations. Throws if the
/// input is not a solution.
inline Primitive split(const Int& x, const Int& y, int k, int n) {
  if (n < 3) throw std::invalid_argument("split: n must be at least 3");
  if (k < 0) throw std::invalid_argument("split: k must be nonnegative");
  if (x == 0) throw std::invalid_argument("split: x must be nonzero");
  if (!holds_eqA(x, y, k, n)) throw std::invalid_argument("split: not a solution");
  Int x1 = abs(x), y1 = y;
  int t = 0, s = 0;
  while (x1 % 7 == 0) {
    x1 /= 7;
    ++t;
  }
  while (y1 % 7 == 0) {
    y1 /= 7;
    ++s;
  }
  Primitive out;
  out.n = n;
  out.t = t;
  out.s = s;
  if (2 * t < 2 * k + 1) {
    // 7^(2t) (x1^2 + 7^(2(k-t)+1)) = 7^(ns) y1^n forces ns = 2t.
    if (n * s != 2 * t) throw std::logic_error("split: inconsistent 7-adic valuations");
    out.flavor = Flavor::EqA;
    out.x = x1;
    out.y = y1;
    out.k = k - t;
    if (!holds_eqA(out.x, out.y, out.k, n)) throw std::logic_error("split: reduction failed");
  } else {
    // 7^(2k+1) (7^(2(t-k)-1) x1^2 + 1) = 7^(ns) y1^n forces ns = 2k + 1.
    if (n * s != 2 * k + 1) throw std::logic_error("split: inconsistent 7-adic valuations");
    out.flavor = Flavor::EqB;
    out.x = x1 * pow(Int(7), static_cast<unsigned>(t - k - 1));
    out.y = y1;
    if (!holds_eqB(out.x, out.y, n)) throw std::logic_error("split: reduction failed");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Box enumeration

struct ThueHit {
  Int u, v, value;
  friend bool operator==(const ThueHit& a, const ThueHit& b) {
    return a.u == b.u && a.v == b.v && a.value == b.value;
  }
};

namespace detail {

using i128 = __int128;

/// Requires |x| < 2^127.
inline i128 to_i128(const Int& x) {
  const Int m = abs(x);
  const auto lo = static_cast<unsigned long long>(m & Int(~0ULL));
  const auto hi = static_cast<unsigned long long>(m >> 64);
  const i128 r = static_cast<i128>((static_cast<unsigned __int128>(hi) << 64) | lo);
  return x < 0 ? -r : r;
}

inline Int from_i128(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Int r = Int(static_cast<unsigned long long>(m >> 64));
  r <<= 64;
  r += static_cast<unsigned long long>(m & ~0ULL);
  return neg ? Int(-r) : r;
}

/// Upper bound on |F(u, v)| for |u| <= box + d, |v| <= box, times 2^d.
inline Int difference_bound(const BinaryForm& f, long long box) {
  const int d = f.degree();
  Int b = 0;
  for (int j = 0; j <= d; ++j)
    b += abs(f.coeff(j)) * pow(Int(box + d), static_cast<unsigned>(d - j)) * pow(Int(box), static_cast<unsigned>(j));
  return b << d;
}

/// Values F(u, v) for u = -box..box at fixed v by forward differences.
template <class Pred>
void scan_row(const BinaryForm& f, long long box, long long v, const Pred& keep,
              std::vector<std::tuple<long long, long long, i128>>& out) {
  const int d = f.degree();
  std::vector<i128> diff(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) diff[static_cast<std::size_t>(i)] = to_i128(f(Int(-box + i), Int(v)));
  for (int lvl = 1; lvl <= d; ++lvl)
    for (int i = d; i >= lvl; --i) diff[static_cast<std::size_t>(i)] -= diff[static_cast<std::size_t>(i - 1)];
  for (long long u = -box; u <= box; ++u) {
    const i128 val = diff[0];
    if (keep(val) && std::gcd(u < 0 ? -u : u, v < 0 ? -v : v) == 1) out.emplace_back(u, v, val);
    for (int i = 0; i < d; ++i) diff[static_cast<std::size_t>(i)] += diff[static_cast<std::size_t>(i + 1)];
  }
}

}  // namespace detail

/// All coprime (u, v) with |u|, |v| <= box such that keep(F(u, v)) holds,
/// sorted by (u, v). The predicate receives the value as __int128.
template <class Pred>
std::vector<ThueHit> enumerate_box(const BinaryForm& f, long long box, const Pred& keep, int jobs = 1) {
  if (box < 0) throw std::invalid_argument("box must be nonnegative");
  if (f.is_zero()) throw std::invalid_argument("enumeration of the zero form");
  std::vector<ThueHit> hits;
  if (detail::difference_bound(f, box) >= (Int(1) << 125)) {
    // Too large for 128-bit differences; evaluate exactly.
    for (long long v = -box; v <= box; ++v)
      for (long long u = -box; u <= box; ++u) {
        if (std::gcd(u < 0 ? -u : u, v < 0 ? -v : v) != 1) continue;
        Int val = f(Int(u), Int(v));
        if (abs(val) < (Int(1) << 126) && keep(detail::to_i128(val))) hits.push_back({u, v, val});
      }
  } else {
    jobs = std::max(1, jobs);
    const long long rows = 2 * box + 1;
    std::vector<std::vector<std::tuple<long long, long long, detail::i128>>> part(static_cast<std::size_t>(jobs));
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (long long r = w; r < rows; r += jobs) detail::scan_row(f, box, -box + r, keep, part[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : part)
      for (const auto& [u, v, val] : p) hits.push_back({Int(u), Int(v), detail::from_i128(val)});
  }
  std::sort(hits.begin(), hits.end(), [](const ThueHit& a, const ThueHit& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return hits;
}

/// Coprime solutions of F(u, v) = m for m in rhs within the box.
inline std::vector<ThueHit> enumerate_thue(const BinaryForm& f, const std::vector<Int>& rhs, long long box,
                                           int jobs = 1) {
  std::vector<detail::i128> targets;
  for (const auto& m : rhs) targets.push_back(detail::to_i128(m));
  return enumerate_box(
      f, box, [&](detail::i128 val) { return std::find(targets.begin(), targets.end(), val) != targets.end(); },
      jobs);
}

struct ThueMahlerHit {
  Int u, v;
  int k = 0;
  int sign = 1;
  friend bool operator==(const ThueMahlerHit& a, const ThueMahlerHit& b) {
    return a.u == b.u && a.v == b.v && a.k == b.k && a.sign == b.sign;
  }
};

/// Coprime (u, v) in the box with F(u, v) = sign * c * 7^k, 0 <= k <= k_max.
inline std::vector<ThueMahlerHit> enumerate_thue_mahler(const BinaryForm& f, const Int& c, long long box, int k_max,
                                                        int jobs = 1) {
  if (c <= 0) throw std::invalid_argument("thue-mahler constant must be positive");
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  const detail::i128 cc = detail::to_i128(c);
  auto keep = [cc, k_max](detail::i128 val) {
    if (val == 0) return false;
    if (val < 0) val = -val;
    if (val % cc != 0) return false;
    val /= cc;
    int k = 0;
    while (val % 7 == 0) {
      val /= 7;
      if (++k > k_max) return false;
    }
    return val == 1;
  };
  std::vector<ThueMahlerHit> out;
  for (const auto& h : enumerate_box(f, box, keep, jobs)) {
    Int m = abs(h.value) / c;
    int k = 0;
    while (m % 7 == 0) {
      m /= 7;
      ++k;
    }
    out.push_back({h.u, h.v, k, h.value < 0 ? -1 : 1});
  }
  return out;
}

/// The Thue-Mahler form whose values are +-7^k: the 7^k-coordinate of
/// alpha^e (u + v w)^n, halved when e = 1 so the constant becomes 1.
struct ThueMahlerSetup {
  BinaryForm form;
  Int constant;
};

inline ThueMahlerSetup thue_mahler_setup(int n, int e) {
  FormPair fp = form_pair(n, e);
  if (e == 1) return {divide_exact(fp.imag2, 2), 1};
  return {fp.imag2, 2};
}

/// Primitive solutions (|a|, b) of a^2 + 7^(2k+1) = b^n read off from
/// Thue-Mahler hits; a = 0 is skipped.
inline std::vector<Primitive> eqA_from_thue_mahler(int n, int e, const std::vector<ThueMahlerHit>& hits) {
  FormPair fp = form_pair(n, e);
  std::vector<Primitive> out;
  for (const auto& h : hits) {
    Int a2 = fp.real2(h.u, h.v);
    if (a2 == 0) continue;
    Int a = abs(a2) / 2;
    Int target = a * a + pow(Int(7), static_cast<unsigned>(2 * h.k + 1));
    Int b;
    if (!is_perfect_power(target, static_cast<unsigned>(n), &b))
      throw std::logic_error("thue-mahler hit does not give a solution");
    Primitive p{Flavor::EqA, a, b, h.k, n, 0, 0};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Primitive& x, const Primitive& y) { return x.x < y.x; });
  return out;
}

/// Primitive solutions (|x|, y) of 7 x^2 + 1 = y^n from the Thue equation
/// real2(u, v) = +-2 within the box, both twists e = 0, 1.
inline std::vector<Primitive> eqB_from_thue(int n, long long box, int jobs = 1) {
  std::vector<Primitive> out;
  for (int e = 0; e <= 1; ++e) {
    FormPair fp = form_pair(n, e);
    for (const auto& h : enumerate_thue(fp.real2, {Int(2), Int(-2)}, box, jobs)) {
      Int x2 = fp.imag2(h.u, h.v);
      if (x2 == 0) continue;
      Int x = abs(x2) / 2;
      Int y;
      if (!is_perfect_power(7 * x * x + 1, static_cast<unsigned>(n), &y))
        throw std::logic_error("thue hit does not give a solution");
      Primitive p{Flavor::EqB, x, y, 0, n, 0, 0};
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const Primitive& a, const Primitive& b) { return a.x < b.x; });
  return out;
}

// ---------------------------------------------------------------------------
// Direct searches

struct Pow2Solution {
  Int x;
  int k = 0;
  int n = 0;
  friend bool operator==(const Pow2Solution& a, const Pow2Solution& b) {
    return a.x == b.x && a.k == b.k && a.n == b.n;
  }
};

/// Solutions of x^2 + 7^(2k+1) = 2^n with n <= n_max, k <= k_max, sorted by (n, k).
inline std::vector<Pow2Solution> search_pow2(int n_max, int k_max) {
  if (n_max < 0 || k_max < 0) throw std::invalid_argument("search_pow2: negative bound");
  std::vector<Pow2Solution> out;
  for (int n = 1; n <= n_max; ++n) {
    const Int p2 = Int(1) << n;
    for (int k = 0; k <= k_max; ++k) {
      const Int d = p2 - pow(Int(7), static_cast<unsigned>(2 * k + 1));
      if (d <= 0) break;
      Int x;
      if (is_square(d, &x)) out.push_back({x, k, n});
    }
  }
  return out;
}

enum class Parity { Any, EvenY };

/// Primitive solutions with 1 <= x <= x_max (and k <= k_max for EqA),
/// found by iterating over y and testing for exact squares.
inline std::vector<Primitive> search_primitive(int n, const Int& x_max, int k_max, Flavor flavor,
                                               Parity parity = Parity::EvenY) {
  if (n < 3) throw std::invalid_argument("search_primitive: n must be at least 3");
  std::vector<Primitive> out;
  auto want_y = [&](const Int& y) { return parity == Parity::Any || y % 2 == 0; };
  if (flavor == Flavor::EqB) {
    const Int top = 7 * x_max * x_max + 1;
    for (Int y = 2;; ++y) {
      const Int yn = pow(y, static_cast<unsigned>(n));
      if (yn > top) break;
      if (!want_y(y) || (yn - 1) % 7 != 0) continue;
      Int x;
      if (is_square((yn - 1) / 7, &x) && x >= 1 && gcd(x, y) == 1) out.push_back({Flavor::EqB, x, y, 0, n, 0, 0});
    }
  } else {
    for (int k = 0; k <= k_max; ++k) {
      const Int c = pow(Int(7), static_cast<unsigned>(2 * k + 1));
      const Int top = x_max * x_max + c;
      for (Int y = iroot(c, static_cast<unsigned>(n));; ++y) {
        const Int yn = pow(y, static_cast<unsigned>(n));
        if (yn > top) break;
        if (yn <= c || !want_y(y)) continue;
        Int x;
        if (is_square(yn - c, &x) && gcd(x, y) == 1) out.push_back({Flavor::EqA, x, y, k, n, 0, 0});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Primitive& a, const Primitive& b) {
    return std::tie(a.k, a.x) < std::tie(b.k, b.x);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Families

/// x = xc 7^(xe*lam + xo), y = yc 7^(ye*lam + yo), k = ke*lam + ko, fixed n.
struct Family {
  std::string name;
  int n;
  Int xc;
  int xe, xo;
  Int yc;
  int ye, yo;
  int ke, ko;
  /// The primitive solution the family is built from.
  Flavor from;
  Int px, py;
  int pk;

  Int x(int lam) const { return xc * pow(Int(7), static_cast<unsigned>(xe * lam + xo)); }
  Int y(int lam) const { return yc * pow(Int(7), static_cast<unsigned>(ye * lam + yo)); }
  int k(int lam) const { return ke * lam + ko; }
};

/// The ten families of solutions of x^2 + 7^(2k+1) = y^n with x != 0.
inline std::vector<Family> listed_families() {
  return {
      {"(7^(3l), 2*7^(2l), 3l)", 3, 1, 3, 0, 2, 2, 0, 3, 0, Flavor::EqA, 1, 2, 0},
      {"(13*7^(3l), 8*7^(2l), 3l+1)", 3, 13, 3, 0, 8, 2, 0, 3, 1, Flavor::EqA, 13, 8, 1},
      // Not primitive: gcd(147, 28) = gcd(1911, 154) = 7.
      {"(147*7^(3l), 28*7^(2l), 3l+1)", 3, 147, 3, 0, 28, 2, 0, 3, 1, Flavor::EqB, 3, 4, 0},
      {"(1911*7^(3l), 154*7^(2l), 3l+1)", 3, 1911, 3, 0, 154, 2, 0, 3, 1, Flavor::EqB, 39, 22, 0},
      {"(3*7^(3l+2), 4*7^(2l+1), 3l+1)", 3, 3, 3, 2, 4, 2, 1, 3, 1, Flavor::EqB, 3, 4, 0},
      {"(7^(3l+2), 2*7^(2l+1), 3l+1)", 3, 1, 3, 2, 2, 2, 1, 3, 1, Flavor::EqB, 1, 2, 0},
      {"(39*7^(3l+2), 22*7^(2l+1), 3l+1)", 3, 39, 3, 2, 22, 2, 1, 3, 1, Flavor::EqB, 39, 22, 0},
      {"(3*7^(2l), 2*7^l, 2l)", 4, 3, 2, 0, 2, 1, 0, 2, 0, Flavor::EqA, 3, 2, 0},
      {"(5*7^(5l), 2*7^(2l), 5l)", 5, 5, 5, 0, 2, 2, 0, 5, 0, Flavor::EqA, 5, 2, 0},
      {"(181*7^(5l), 8*7^(2l), 5l)", 5, 181, 5, 0, 8, 2, 0, 5, 0, Flavor::EqA, 181, 8, 0},
  };
}

struct FamilyCheck {
  std::string name;
  int n;
  int identities = 0;
  int failures = 0;
};

/// Placement checks for the solution built on 181^2 + 7 = 2^15.
struct Placement {
  std::string claim;
  bool holds;
};

struct FamilyReport {
  std::vector<FamilyCheck> families;
  std::vector<Placement> placements;
  /// Primitive n = 3 solution absent from the listed families, if any.
  std::optional<Family> unlisted;
  /// Pairs of listed families that produce the same solutions.
  std::vector<std::pair<std::string, std::string>> coincident;
  bool all_hold() const {
    for (const auto& f : families)
      if (f.failures) return false;
    return true;
  }
};

inline bool family_identity(const Family& f, int lam) { return holds_eqA(f.x(lam), f.y(lam), f.k(lam), f.n); }

inline FamilyReport verify_families(int lambda_max) {
  if (lambda_max < 0) throw std::invalid_argument("lambda_max must be nonnegative");
  FamilyReport rep;
  for (const auto& f : listed_families()) {
    FamilyCheck c{f.name, f.n, 0, 0};
    for (int lam = 0; lam <= lambda_max; ++lam) {
      ++c.identities;
      if (!family_identity(f, lam)) ++c.failures;
    }
    rep.families.push_back(c);
  }
  rep.placements = {
      {"181^2 + 7 = 8^5 (k = 0, n = 5)", holds_eqA(181, 8, 0, 5)},
      {"181^2 + 7 = 64^3 (k = 0, n = 3)", holds_eqA(181, 64, 0, 3)},
      {"181^2 + 7 = 32^3 (k = 0, n = 3)", holds_eqA(181, 32, 0, 3)},
  };
  Family extra{"(181*7^(3l), 32*7^(2l), 3l)", 3, 181, 3, 0, 32, 2, 0, 3, 0, Flavor::EqA, 181, 32, 0};
  bool ok = true;
  for (int lam = 0; lam <= lambda_max; ++lam) ok = ok && family_identity(extra, lam);
  if (ok) rep.unlisted = extra;
  const auto fams = listed_families();
  for (std::size_t a = 0; a < fams.size(); ++a)
    for (std::size_t b = a + 1; b < fams.size(); ++b) {
      const Family &f = fams[a], &g = fams[b];
      // Both sides are c * 7^(e*lam + o): agreement at two values of lam is identity.
      bool same = f.n == g.n;
      for (int lam = 0; lam <= 1 && same; ++lam) same = f.x(lam) == g.x(lam) && f.y(lam) == g.y(lam) && f.k(lam) == g.k(lam);
      if (same) rep.coincident.emplace_back(f.name, g.name);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Elementary eliminations for n = 3, 4, 5

struct Elimination {
  std::string claim;
  bool holds;
  std::string detail;
};

/// True iff F(u, v) mod m avoids every value in `bad` over the residue pairs
/// with v in `v_residues`.
inline bool avoids_mod(const BinaryForm& f, long long m, const std::vector<long long>& v_residues,
                       const std::vector<long long>& bad) {
  for (long long u = 0; u < m; ++u)
    for (long long v : v_residues) {
      Int r = mod(f(Int(u), Int(v)), Int(m));
      for (long long b : bad)
        if (r == mod(Int(b), Int(m))) return false;
    }
  return true;
}

/// The congruence and size arguments closing the first Thue-Mahler equation
/// for n = 3 and n = 5, and the n = 4 reduction 2 b^2 = 7^(2k+1) + 1.
inline std::vector<Elimination> small_exponent_eliminations(int k_max = 12, long long box = 1000) {
  std::vector<Elimination> out;
  // n = 5, v = 7^k: the quartic cofactor is -v^4 mod 5, never +-2.
  {
    BinaryForm q({5, 10, -10, -15, -1});
    out.push_back({"n=5: 5u^4+10u^3v-10u^2v^2-15uv^3-v^4 != +-2 mod 5 when 5 does not divide v",
                   avoids_mod(q, 5, {1, 2, 3, 4}, {2, -2}), "all 20 residue pairs"});
  }
  // n = 3, v = 7^k (odd): the quadratic cofactor is odd.
  {
    BinaryForm q({3, 3, -1});
    out.push_back({"n=3: 3u^2+3uv-v^2 is odd when v is odd", avoids_mod(q, 2, {1}, {0}), "mod 2"});
  }
  // n = 3, v = 2, plus sign: 3u^2 + 6u - 4 = 2 mod 3, never 7^k = 1 mod 3.
  {
    bool ok = true;
    for (long long u = 0; u < 3; ++u) ok = ok && mod(Int(3 * u * u + 6 * u - 4), Int(3)) != 1;
    out.push_back({"n=3: 3u^2+6u-4 != 7^k mod 3", ok, "mod 3"});
  }
  // n = 3, v = 2, minus sign: 49 never divides 3(u+1)^2 - 7, so k <= 1.
  {
    bool ok = true;
    for (long long u = 0; u < 49; ++u) ok = ok && (3 * (u + 1) * (u + 1) - 7) % 49 != 0;
    std::string sols;
    for (long long u = -box; u <= box; ++u)
      for (int k = 0; k <= 1; ++k)
        if (3 * (u + 1) * (u + 1) - 7 == -(k == 0 ? 1 : 7)) sols += "(u,k)=(" + std::to_string(u) + "," + std::to_string(k) + ") ";
    out.push_back({"n=3: 3(u+1)^2-7 = -7^k forces k <= 1; only u=-1, k=1 (a=0)", ok && sols == "(u,k)=(-1,1) ",
                   sols});
  }
  // n = 5, v = 2: g(u) = +-7^k in a box (the S-unit bound is external).
  {
    std::string sols;
    for (long long u = -box; u <= box; ++u) {
      Int g = Int(5) * pow(Int(u), 4) + 20 * pow(Int(u), 3) - 40 * u * u - 120 * u - 16;
      Int m = abs(g);
      int k = 0;
      while (m > 1 && m % 7 == 0) {
        m /= 7;
        ++k;
      }
      if (m == 1 && k <= k_max) sols += "(u,k)=(" + std::to_string(u) + "," + std::to_string(k) + ") ";
    }
    out.push_back({"n=5, v=2: 5u^4+20u^3-40u^2-120u-16 = +-7^k only at u=-1, k=2 (a=0) in the box",
                   sols == "(u,k)=(-1,2) ", sols});
  }
  // n = 4: 2 b^2 = 7^(2k+1) + 1 has only k = 0, b = 2 up to k_max.
  {
    std::string sols;
    for (int k = 0; k <= k_max; ++k) {
      Int r = pow(Int(7), static_cast<unsigned>(2 * k + 1)) + 1;
      Int b;
      if (r % 2 == 0 && is_square(r / 2, &b)) sols += "(k,b)=(" + std::to_string(k) + "," + b.str() + ") ";
    }
    out.push_back({"n=4: 2b^2 = 7^(2k+1)+1 only at k=0, b=2", sols == "(k,b)=(0,2) ", sols});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The modular-curve description of n = 13

struct X013Report {
  std::vector<ThueHit> thue_hits;
  /// 7-adic valuation of j13(x/y) at each hit (nullopt when undefined).
  std::vector<std::optional<int>> v7_j;
  bool thue_ok = false;
  bool valuations_ok = false;
  bool h2_nonzero_mod7 = false;
};

inline X013Report x013_check(long long box = 10000, int jobs = 1) {
  X013Report rep;
  std::vector<Int> rhs;
  for (int m : {1, 2, 3, 4, 6, 12}) {
    rhs.emplace_back(m);
    rhs.emplace_back(-m);
  }
  for (const auto& h : enumerate_thue(x013_h1(), rhs, box, jobs))
    if (h.u != 0 && h.v != 0) rep.thue_hits.push_back(h);
  // Every hit must be one of (+-1, +-1), (+-2, +-1).
  rep.thue_ok = !rep.thue_hits.empty();
  for (const auto& h : rep.thue_hits)
    rep.thue_ok = rep.thue_ok && abs(h.v) == 1 && (abs(h.u) == 1 || abs(h.u) == 2);
  rep.valuations_ok = true;
  for (const auto& h : rep.thue_hits) {
    auto j = j13(h.u, h.v);
    if (!j || *j == 0) {
      rep.v7_j.push_back(std::nullopt);
      rep.valuations_ok = false;
      continue;
    }
    int v = valuation(*j, Int(7));
    rep.v7_j.push_back(v);
    if (v != 0) rep.valuations_ok = false;
  }
  rep.h2_nonzero_mod7 = true;
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      if ((x || y) && mod(x013_h2()(Int(x), Int(y)), Int(7)) == 0) rep.h2_nonzero_mod7 = false;
  return rep;
}

}  // namespace nagell
