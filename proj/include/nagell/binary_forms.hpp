#pragma once

// Integral binary forms, the form pairs obtained by expanding
// alpha^e (u + v w)^n in Z[w], and resultants of binary forms.

#include "nagell/integer.hpp"
#include "nagell/polynomial.hpp"
#include "nagell/quad_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nagell {

/// Homogeneous form sum_j c[j] u^(d-j) v^j of formal degree d = c.size() - 1.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Int> coeffs_u_descending) : c_(std::move(coeffs_u_descending)) {
    if (c_.empty()) throw std::invalid_argument("binary form needs a degree");
  }

  /// Homogenization of p(t) = F(1, t) to formal degree d.
  static BinaryForm homogenize(const IntPoly& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("polynomial degree exceeds form degree");
    std::vector<Int> c(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)];
    return BinaryForm(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(int j) const { return c_.at(static_cast<std::size_t>(j)); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  template <class X>
  X operator()(const X& u, const X& v) const {
    // Horner in the ratio, carried homogeneously.
    X acc = X(0), vpow = X(1);
    std::vector<X> vp(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) {
      vp[j] = vpow;
      vpow = vpow * v;
    }
    X upow = X(1);
    for (std::size_t j = c_.size(); j-- > 0;) {
      acc = acc + X(c_[j]) * upow * vp[j];
      upow = upow * u;
    }
    return acc;
  }

  /// The form with u and v exchanged.
  BinaryForm swapped() const { return BinaryForm(std::vector<Int>(c_.rbegin(), c_.rend())); }

  /// F(1, t).
  IntPoly dehomogenized() const { return IntPoly(c_); }

  /// Largest |coefficient|, a crude size measure.
  Int height() const {
    Int h = 0;
    for (const auto& x : c_) h = std::max(h, abs(x));
    return h;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

  std::string str() const {
    std::string out;
    const int d = degree();
    for (int j = 0; j <= d; ++j) {
      const Int& k = c_[static_cast<std::size_t>(j)];
      if (k == 0) continue;
      const Int mag = abs(k);
      if (out.empty()) {
        if (k < 0) out += "-";
      } else {
        out += k < 0 ? " - " : " + ";
      }
      const int eu = d - j, ev = j;
      if (mag != 1 || (eu == 0 && ev == 0)) out += mag.str();
      auto var = [&](const char* name, int e) {
        if (e == 0) return;
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
      };
      var("u", eu);
      var("v", ev);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<Int> c_;
};

/// alpha^e (u + v w)^n written as (real2 + imag2 sqrt(-7))/2.
struct FormPair {
  int n = 0;
  int e = 0;
  BinaryForm real2;
  BinaryForm imag2;
};

/// The twisting element 2 w^(n-2) of norm 2^n.
inline QuadInt twist_alpha(int n) {
  if (n < 2) throw std::invalid_argument("twist needs n >= 2");
  return QuadInt(2, 0) * pow(QuadInt::pi2(), static_cast<unsigned>(n - 2));
}

inline FormPair form_pair(int n, int e) {
  if (n < 2) throw std::invalid_argument("form_pair: n must be at least 2");
  if (e != 0 && e != 1) throw std::invalid_argument("form_pair: e must be 0 or 1");
  using QP = QuadElem<IntPoly>;
  QP gamma{IntPoly(1), IntPoly::x()};
  QP z = pow(gamma, static_cast<unsigned>(n));
  if (e == 1) {
    QuadInt a = twist_alpha(n);
    z = QP{IntPoly(a.u), IntPoly(a.v)} * z;
  }
  auto [re2, im2] = to_half_coords(z);
  return {n, e, BinaryForm::homogenize(re2, n), BinaryForm::homogenize(im2, n)};
}

/// The form whose values must be +-2 for 7 x^2 + 1 = y^n.
inline BinaryForm thue_form_eqB(int n, int e) { return form_pair(n, e).real2; }

/// Divide every coefficient by the positive integer d (must be exact).
inline BinaryForm divide_exact(const BinaryForm& f, const Int& d) {
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) {
    if (x % d != 0) throw std::invalid_argument("form coefficients not divisible by " + d.str());
    x /= d;
  }
  return BinaryForm(std::move(c));
}

enum class Eliminate { U, V };

/// Resultant of two binary forms eliminating one variable. The result is a
/// monomial R * (other variable)^(deg f * deg g); the coefficient R is
/// returned. Formal degrees are used throughout, so a vanishing leading
/// coefficient is handled by the Sylvester determinant directly.
inline Int resultant(const BinaryForm& f, const BinaryForm& g, Eliminate which) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of the zero form");
  if (which == Eliminate::U) return sylvester_resultant(f.coeffs(), g.coeffs());
  return sylvester_resultant(f.swapped().coeffs(), g.swapped().coeffs());
}

/// The pair of forms attached to the modular-curve description of the
/// exceptional case n = 13.
inline BinaryForm x013_h1() { return BinaryForm({1, 7, 20, 19, 1}); }
inline BinaryForm x013_h2() { return BinaryForm({1, 15, 13}); }

/// j13(t) = h1(t,1)^3 h2(t,1) / t evaluated at the rational x/y.
inline std::optional<Rational> j13(const Int& x, const Int& y) {
  if (x == 0 || y == 0) return std::nullopt;
  const Int h1 = x013_h1()(x, y);
  const Int h2 = x013_h2()(x, y);
  // h1(x/y,1) = h1/y^4 and h2(x/y,1) = h2/y^2, so j = h1^3 h2 / (x y^13).
  return Rational(pow(h1, 3) * h2) / Rational(x * pow(y, 13));
}

}  // namespace nagell
