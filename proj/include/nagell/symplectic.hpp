#pragma once

// Symplectic criteria at 2 (multiplicative) and 3 (additive, types II/III)
// for the exceptional pairs (E1', E_f), and the exponent classes mod 24 they
// exclude.

#include "nagell/elliptic.hpp"
#include "nagell/frey.hpp"
#include "nagell/integer.hpp"

#include <set>
#include <string>
#include <vector>

namespace nagell {

/// Jacobi symbol (a/n) for odd n > 0.
inline int kronecker(Int a, Int n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("kronecker: n must be odd and positive");
  a = mod(a, n);
  int s = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const int r = static_cast<int>(n % 8);
      if (r == 3 || r == 5) s = -s;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) s = -s;
    a = a % n;
  }
  return n == 1 ? s : 0;
}

/// x divided by its largest square factor, sign kept.
inline Int squarefree_part(const Int& x) {
  if (x == 0) throw std::invalid_argument("squarefree_part of 0");
  Int out = sign(x) < 0 ? Int(-1) : Int(1);
  for (const auto& [p, e] : factor(abs(x)))
    if (e % 2) out *= p;
  return out;
}

/// "(d/n) = 1 exactly when the isomorphism is symplectic".
struct QuadraticCondition {
  Int d = 1;
  std::string str() const { return "(" + d.str() + "/n) = 1"; }
};

/// Both curves multiplicative at 2 with v2(Delta) = v1, v2 (up to multiples
/// of n): symplectic iff v1 * v2 is a square mod n.
inline QuadraticCondition symplectic_at_2(const Int& v1, const Int& v2) {
  if (v1 * v2 == 0) throw std::invalid_argument("symplectic_at_2: valuations must be nonzero");
  return {squarefree_part(v1 * v2)};
}

/// (d/n) for every prime n = r mod 24, with d supported on {-1, 2, 3};
/// computed from the supplementary laws and reciprocity.
inline int class_value(const Int& d, int r) {
  if (std::gcd(r, 24) != 1) throw std::invalid_argument("class_value: r must be a unit mod 24");
  r = ((r % 24) + 24) % 24;
  int s = 1;
  Int m = abs(d);
  if (d < 0 && r % 4 == 3) s = -s;
  while (m % 2 == 0) {
    m /= 2;
    if (r % 8 == 3 || r % 8 == 5) s = -s;
  }
  while (m % 3 == 0) {
    m /= 3;
    const int n_mod3 = r % 3 == 1 ? 1 : -1;
    const int twist = r % 4 == 1 ? 1 : -1;
    s *= n_mod3 * twist;
  }
  if (m != 1) throw std::invalid_argument("class_value: d must be supported on {-1, 2, 3}");
  return s;
}

enum class Verdict { Symplectic, AntiSymplectic, Undetermined };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Symplectic: return "symplectic";
    case Verdict::AntiSymplectic: return "anti-symplectic";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

/// The criterion at 3 for the two additive profiles; kron3 is (3/n).
inline Verdict symplectic_at_3(const LocalData& inst, const LocalData& form, int eps3, int kron3) {
  if (inst.p != 3 || form.p != 3) throw std::invalid_argument("symplectic_at_3: local data must be at 3");
  if (eps3 == 2) {
    auto profile = [](const LocalData& d) {
      return d.kodaira.kind == Kodaira::III && d.vp_delta_min % 4 == 3 && d.delta_unit_mod_p == 1;
    };
    return profile(inst) && profile(form) ? Verdict::Symplectic : Verdict::Undetermined;
  }
  if (eps3 == 3) {
    if (inst.kodaira.kind != Kodaira::II || form.kodaira.kind != Kodaira::II) return Verdict::Undetermined;
    if (kron3 == 1) return Verdict::Symplectic;
    const bool form_ok = form.vp_c4_min == 2 && form.vp_c6_min == 3 && form.vp_delta_min == 3;
    const bool inst_ok = inst.vp_c4_min == 2 && (inst.vp_c6_min == 3 || inst.vp_c6_min == 4) && inst.vp_delta_min == 3;
    return form_ok && inst_ok ? Verdict::Symplectic : Verdict::Undetermined;
  }
  return Verdict::Undetermined;
}

inline Verdict symplectic_at_3(const LocalData& inst, const LocalData& form, int eps3, const Int& n) {
  return symplectic_at_3(inst, form, eps3, kronecker(3, n));
}

enum class IClass { Zero, Nonzero };

inline IClass i_class_of_k(const Int& k) { return mod(2 * k + 1, Int(3)) == 0 ? IClass::Zero : IClass::Nonzero; }

/// One surviving pair (E1' with given i and eps3, E_f).
struct ExceptionalPair {
  std::string label;
  WeierstrassCurve curve;
  int i = 0;
  int eps3 = 0;
};

/// The exceptional curves of the sieve at levels 54, 882, 2646.
inline std::vector<ExceptionalPair> exceptional_pairs() {
  return {
      {"54b1", WeierstrassCurve(1, -1, 1, 1, -1), 0, 3},
      {"882g1", WeierstrassCurve(1, -1, 1, 1, 39), 1, 2},
      {"882f1", WeierstrassCurve(1, -1, 1, 64, -13597), 2, 2},
      {"2646bc1", WeierstrassCurve(1, -1, 1, 1, -3), 1, 3},
      {"2646q1", WeierstrassCurve(1, -1, 1, 64, 809), 2, 3},
  };
}

struct PairAnalysis {
  std::string label;
  int i = 0, eps3 = 0;
  int v2_form = 0;
  QuadraticCondition at2;
  /// Verdict at 3 per unit class mod 24.
  std::vector<std::pair<int, Verdict>> at3;
  /// Classes where the criteria at 2 and 3 disagree.
  std::set<int> excluded;
};

/// v2(Delta(E1')) = -6 + n v2(b), i.e. -6 modulo n.
inline constexpr int kV2FreyMinimal = -6;

inline PairAnalysis analyze_pair(const ExceptionalPair& p) {
  PairAnalysis a;
  a.label = p.label;
  a.i = p.i;
  a.eps3 = p.eps3;
  const LocalData f2 = tate(p.curve, 2);
  if (!f2.multiplicative()) throw std::domain_error(p.label + " is not multiplicative at 2");
  a.v2_form = f2.vp_delta_min;
  a.at2 = symplectic_at_2(kV2FreyMinimal, a.v2_form);
  const auto rep = representative_23n(p.i, p.eps3);
  if (!rep) throw std::runtime_error("no (2,3,n) representative for " + p.label);
  if (!tate(rep->curve, 2).multiplicative()) throw std::domain_error("representative not multiplicative at 2");
  const LocalData inst3 = tate(rep->curve, 3), form3 = tate(p.curve, 3);
  for (int r = 1; r < 24; ++r) {
    if (std::gcd(r, 24) != 1) continue;
    const int k3 = class_value(3, r);
    const Verdict v3 = symplectic_at_3(inst3, form3, p.eps3, k3);
    a.at3.emplace_back(r, v3);
    if (v3 == Verdict::Symplectic && class_value(a.at2.d, r) == -1) a.excluded.insert(r);
  }
  return a;
}

/// Classes mod 24 excluded for every exceptional pair of the given i class.
inline std::set<int> excluded_classes(IClass cls, const std::vector<ExceptionalPair>& pairs = exceptional_pairs()) {
  std::set<int> out;
  for (int r = 1; r < 24; ++r)
    if (std::gcd(r, 24) == 1) out.insert(r);
  for (const auto& p : pairs) {
    if ((p.i == 0) != (cls == IClass::Zero)) continue;
    const PairAnalysis a = analyze_pair(p);
    std::set<int> keep;
    for (int r : out)
      if (a.excluded.count(r)) keep.insert(r);
    out = keep;
  }
  return out;
}

}  // namespace nagell
