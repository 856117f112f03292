#pragma once

// Dense univariate polynomials with exact coefficients, exact determinants
// and Sylvester resultants.

#include "nagell/integer.hpp"

#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace nagell {

/// Coefficients are stored in ascending order: c[0] + c[1] x + ...
/// The zero polynomial has no coefficients; degree() of zero is -1.
template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(R constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_.push_back(std::move(constant));
  }
  Poly(int constant) : Poly(R(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<R> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }
  static Poly monomial(R coeff, std::size_t deg) {
    std::vector<R> c(deg + 1, R(0));
    c[deg] = std::move(coeff);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }

  template <class X>
  X operator()(const X& at) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + X(*it);
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> c = a.c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(int k, const Poly& a) { return Poly(R(k)) * a; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator==(const Poly& a, int k) { return a == Poly(k); }
  friend bool operator!=(const Poly& a, int k) { return !(a == Poly(k)); }

  std::string str(const char* var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const R& k = c_[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      R mag = k < 0 ? R(-k) : k;
      os << (k < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << var;
      if (i > 1) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  return os << p.str();
}

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

template <class R>
Poly<R> pow(Poly<R> base, unsigned n) {
  Poly<R> r(R(1));
  while (n) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1u;
  }
  return r;
}

/// Remainder of a modulo a nonzero b over the rationals.
inline RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    Rational q = a.leading() / b.leading();
    a -= RatPoly::monomial(q, static_cast<std::size_t>(a.degree() - db)) * b;
  }
  return a;
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

/// Gaussian-elimination determinant over the rationals.
inline Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

/// Sylvester matrix of two coefficient lists given in descending order with
/// formal degrees len-1 (leading zeros are kept).
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<R>> s(size, std::vector<R>(size, R(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[j];
  return s;
}

/// Resultant of two univariate polynomials (descending coefficient lists,
/// formal degrees) as the Sylvester determinant.
inline Int sylvester_resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("empty coefficient list");
  return determinant(sylvester_matrix(f, g));
}

inline Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("empty coefficient list");
  return determinant(sylvester_matrix(f, g));
}

template <class R>
std::vector<R> descending(const Poly<R>& p) {
  std::vector<R> c(p.coeffs().rbegin(), p.coeffs().rend());
  if (c.empty()) c.push_back(R(0));
  return c;
}

}  // namespace nagell
