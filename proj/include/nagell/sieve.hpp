#pragma once

// Multi-Frey trace sieve for x^2 + 7^(2k+1) = b^n against pairs of newforms
// (f1 at level 14, f1' at the level of the (2,3,n) curve), with inertia
// comparison at 3 and 7, and the two level-98 eliminations for eqB.

#include "nagell/elliptic.hpp"
#include "nagell/frey.hpp"
#include "nagell/newforms.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace nagell {

/// One residue configuration of a putative solution modulo l.
struct ResidueTuple {
  std::int64_t a = 0;     // a mod l
  std::int64_t s7 = 0;    // 7^(2k+1) mod l
  int i = 0;              // (2k+1) mod 3
  std::int64_t p7 = 0;    // 7^(l'+i) mod l
  std::int64_t s7i = 0;   // 7^i mod l
  friend bool operator<(const ResidueTuple& x, const ResidueTuple& y) {
    return std::tie(x.a, x.s7, x.i, x.p7, x.s7i) < std::tie(y.a, y.s7, y.i, y.p7, y.s7i);
  }
  friend bool operator==(const ResidueTuple& x, const ResidueTuple& y) {
    return std::tie(x.a, x.s7, x.i, x.p7, x.s7i) == std::tie(y.a, y.s7, y.i, y.p7, y.s7i);
  }
};

inline std::int64_t bn_mod(const ResidueTuple& t, std::int64_t l) { return mod64(t.a * t.a + t.s7, l); }

inline std::int64_t pow_mod64(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod64(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

inline std::int64_t inv_mod64(std::int64_t x, std::int64_t m) { return pow_mod64(x, m - 2, m); }

inline int multiplicative_order(std::int64_t g, std::int64_t l) {
  int k = 1;
  for (std::int64_t x = mod64(g, l); x != 1; x = x * mod64(g, l) % l) ++k;
  return k;
}

/// All (a, 7-power data) configurations modulo a prime l not in {2, 7}.
inline std::vector<ResidueTuple> residue_tuples(std::int64_t l) {
  if (l == 2 || l == 7 || !is_prime(Int(l))) throw std::invalid_argument("residue_tuples: l must be a prime other than 2, 7");
  const int ord = multiplicative_order(7, l);
  std::set<ResidueTuple> seen;
  for (int k = 0; k < 3 * ord; ++k) {
    const int e = 2 * k + 1, i = e % 3, lp = e / 3;
    const std::int64_t s7 = pow_mod64(7, e, l), p7 = pow_mod64(7, lp + i, l), s7i = pow_mod64(7, i, l);
    for (std::int64_t a = 0; a < l; ++a) seen.insert({a, s7, i, p7, s7i});
  }
  return {seen.begin(), seen.end()};
}

/// E1 and E1' reduced modulo l for a tuple; E1 is singular when l | b^n.
inline ModCoeffs e1_mod(const ResidueTuple& t, std::int64_t l) {
  const std::int64_t bn = bn_mod(t, l);
  return {1, mod64((t.a - 1) * inv_mod64(4, l), l), 0, bn * inv_mod64(64, l) % l, 0};
}

inline ModCoeffs e1prime_mod(const ResidueTuple& t, std::int64_t l) {
  const std::int64_t sign = t.i % 2 == 0 ? -1 : 1;
  return {0, 0, 0, mod64(3 * t.p7, l), mod64(sign * 2 * t.s7i % l * t.a, l)};
}

inline Int rational_trace(const NewformRecord& f, std::int64_t l) {
  FieldElem c = af_ell(f, l);
  if (!c.is_rational() || !is_integer(c.coords()[0])) throw std::logic_error("rational form with non-integral a_l");
  return numer(c.coords()[0]);
}

/// a_l(E1) - a_l(f1), or (l+1)^2 - a_l(f1)^2 when l | b^n (multiplicative).
inline Int r1(const NewformRecord& f1, const ResidueTuple& t, std::int64_t l) {
  const Int af = rational_trace(f1, l);
  if (bn_mod(t, l) == 0) return Int(l + 1) * (l + 1) - af * af;
  return Int(ap_mod(e1_mod(t, l), l)) - af;
}

/// Norm(a_l(E1') - a_l(f1')), or Norm((l+1)^2 - a_l(f1')^2) when l | b^n.
/// Zero (no information) when l divides the level of f1'.
inline Int r1prime(const NewformRecord& f1p, const ResidueTuple& t, std::int64_t l) {
  if (f1p.level % l == 0) return 0;
  const FieldElem af = af_ell(f1p, l);
  const FieldElem d = bn_mod(t, l) == 0 ? FieldElem::rational(f1p.field, Rational((l + 1) * (l + 1))) - af * af
                                        : FieldElem::rational(f1p.field, Rational(ap_mod(e1prime_mod(t, l), l))) - af;
  return checked_int(d.norm());
}

/// Product over tuples (restricted to one i when given) of gcd(R1, R1'),
/// times l when f1' is irrational.
inline Int t_ell(const NewformRecord& f1, const NewformRecord& f1p, std::int64_t l, std::optional<int> i = std::nullopt) {
  Int prod = f1p.rational() ? Int(1) : Int(l);
  for (const auto& t : residue_tuples(l)) {
    if (i && t.i != *i) continue;
    prod *= gcd(r1(f1, t, l), r1prime(f1p, t, l));
    if (prod == 0) break;
  }
  return prod;
}

/// Both curves' inertia orders at p agree. Throws UncalibratedInertia.
inline bool compare_inertia(const FreyInstance& inst, const WeierstrassCurve& form_curve, const Int& p) {
  const InertiaOrder x = inertia_order(inst.curve, p), y = inertia_order(form_curve, p);
  return x.potentially_multiplicative == y.potentially_multiplicative && x.order == y.order;
}

inline bool compare_inertia(const FreyInstance& inst, const NewformRecord& f1p, const Int& p) {
  if (!f1p.curve) throw std::invalid_argument("compare_inertia: " + f1p.label + " carries no curve");
  return compare_inertia(inst, *f1p.curve, p);
}

struct SieveReport {
  std::string f1_label, f1p_label;
  int level = 0;
  /// The residue class of 2k+1 mod 3 the pair is tested under.
  int i = 0;
  int eps3 = 0;
  std::map<std::int64_t, Int> per_ell;
  Int u_value = 0;
  /// Empty when inertia was not compared (irrational form, no curve, or
  /// an uncalibrated local profile).
  std::optional<bool> inertia_match;
  std::string inertia_note;
  bool surviving = false;
  /// Primes dividing U when U != 0.
  std::vector<Int> exponent_bound;
  /// Prime exponent n -> the first l != n with n not dividing T_l, or 0
  /// when n is eliminated by the inertia comparison.
  std::map<int, std::int64_t> witnesses;
};

/// The (i, eps3) combinations whose (2,3,n) curve has conductor N.
inline std::vector<std::pair<int, int>> level_profiles(int level) {
  const int v2 = valuation(Int(level), 2), v3 = valuation(Int(level), 3), v7 = valuation(Int(level), 7);
  if (v2 != 1 || (v3 != 2 && v3 != 3) || (v7 != 0 && v7 != 2)) return {};
  if (Int(level) != 2 * pow(Int(3), v3) * pow(Int(7), v7)) return {};
  if (v7 == 0) return {{0, v3}};
  return {{1, v3}, {2, v3}};
}

inline std::vector<std::int64_t> default_sieve_primes(std::int64_t l_max = 31) {
  std::vector<std::int64_t> out;
  for (auto l : primes_up_to(l_max))
    if (l != 2 && l != 7) out.push_back(l);
  return out;
}

inline SieveReport u_bound(const NewformRecord& f1, const NewformRecord& f1p, int i, int eps3,
                           const std::vector<std::int64_t>& ells, int n_max = 100) {
  SieveReport r;
  r.f1_label = f1.label;
  r.f1p_label = f1p.label;
  r.level = f1p.level;
  r.i = i;
  r.eps3 = eps3;
  for (auto l : ells) {
    const Int t = t_ell(f1, f1p, l, i);
    r.per_ell[l] = t;
    r.u_value = gcd(r.u_value, t);
  }
  if (f1p.rational() && f1p.curve) {
    auto rep = representative_23n(i, eps3);
    if (!rep) {
      r.inertia_note = "no (2,3,n) representative found";
    } else {
      try {
        r.inertia_match = compare_inertia(*rep, *f1p.curve, 3) && compare_inertia(*rep, *f1p.curve, 7);
        r.inertia_note = r.inertia_match.value() ? "orders agree at 3 and 7" : "orders differ";
      } catch (const UncalibratedInertia& e) {
        r.inertia_note = e.what();
      }
    }
  } else {
    r.inertia_note = f1p.rational() ? "no curve attached" : "irrational form";
  }
  r.surviving = r.u_value == 0 && r.inertia_match.value_or(true);
  if (r.u_value != 0)
    for (const auto& [p, e] : factor(r.u_value)) r.exponent_bound.push_back(p);
  for (auto n : primes_up_to(n_max)) {
    if (n < 11) continue;
    if (r.inertia_match == false) {
      r.witnesses[static_cast<int>(n)] = 0;
      continue;
    }
    for (auto l : ells)
      if (l != n && r.per_ell[l] % n != 0) {
        r.witnesses[static_cast<int>(n)] = l;
        break;
      }
  }
  return r;
}

/// Every (f1', i) pair at the given levels against the level-14 form.
inline std::vector<SieveReport> run_sieve(const NewformDatabase& db, const std::vector<int>& levels,
                                          const std::vector<std::int64_t>& ells, int n_max = 100) {
  const auto& forms14 = db.newforms(14);
  std::vector<SieveReport> out;
  for (const auto& f1 : forms14)
    for (int level : levels)
      for (auto [i, eps3] : level_profiles(level))
        for (const auto& f1p : db.newforms(level)) out.push_back(u_bound(f1, f1p, i, eps3, ells, n_max));
  return out;
}

// ---------------------------------------------------------------------------
// Level 98

struct IrrationalElimination {
  std::string label;
  /// Norm(a_3(f) - t) for |t| <= 3, then Norm(a_3(f)^2 - 16).
  std::vector<Int> values;
  /// Radical of the lcm of the values; 0 if some value vanishes.
  Int bound = 0;
};

struct RationalElimination {
  std::string label;
  int v7_j = 0;
  bool potentially_multiplicative = false;
  int e2_inertia_at_7 = 0;
  bool contradiction = false;
};

struct Level98Report {
  std::vector<IrrationalElimination> irrational;
  std::vector<RationalElimination> rational;
  /// No eqB solution with prime exponent n >= 11 survives.
  bool no_solutions_n_ge_11 = false;
};

inline Level98Report eliminate_level98(const NewformDatabase& db) {
  Level98Report rep;
  bool all = true;
  const FreyInstance e2 = frey_eqB(3, 64, 3);
  const InertiaOrder e2_7 = inertia_order(e2.curve, 7);
  for (const auto& f : db.newforms(98)) {
    if (!f.rational()) {
      IrrationalElimination x;
      x.label = f.label;
      const FieldElem a3 = af_ell(f, 3);
      for (int t = -3; t <= 3; ++t) x.values.push_back(checked_int((a3 - Rational(t)).norm()));
      x.values.push_back(checked_int((a3 * a3 - Rational(16)).norm()));
      Int l = 1;
      bool zero = false;
      for (const auto& v : x.values) {
        if (v == 0) zero = true;
        else l = lcm(l, abs(v));
      }
      x.bound = zero ? Int(0) : radical(l);
      bool ok = x.bound != 0;
      if (ok)
        for (const auto& [p, e] : factor(x.bound)) ok = ok && p < 11;
      all = all && ok;
      rep.irrational.push_back(x);
    } else {
      RationalElimination x;
      x.label = f.label;
      if (!f.curve) {
        all = false;
        rep.rational.push_back(x);
        continue;
      }
      x.v7_j = valuation(f.curve->j(), 7);
      x.potentially_multiplicative = inertia_order(*f.curve, 7).potentially_multiplicative;
      x.e2_inertia_at_7 = e2_7.potentially_multiplicative ? 0 : e2_7.order;
      // n | #rho_f(I_7) while #rho_E2(I_7) = order; impossible once n > order.
      x.contradiction = x.potentially_multiplicative && !e2_7.potentially_multiplicative && e2_7.order < 11;
      all = all && x.contradiction;
      rep.rational.push_back(x);
    }
  }
  rep.no_solutions_n_ge_11 = all && !db.newforms(98).empty();
  return rep;
}

}  // namespace nagell
