#pragma once

// Arithmetic in the maximal order Z[w] of Q(sqrt(-7)), w = (1 + sqrt(-7))/2.
//
// Elements are stored as u + v*w. The generator satisfies w^2 = w - 2, so the
// ring operations never leave integer coordinates. The coordinate type is a
// template parameter so the same code expands binary forms (coordinates are
// polynomials) and evaluates integers.

#include "nagell/integer.hpp"

#include <ostream>
#include <utility>

namespace nagell {

template <class T>
struct QuadElem {
  T u{};
  T v{};

  QuadElem() = default;
  QuadElem(T u_, T v_) : u(std::move(u_)), v(std::move(v_)) {}

  static QuadElem one() { return {T(1), T(0)}; }
  /// The prime element (1 + sqrt(-7))/2 above 2.
  static QuadElem pi2() { return {T(0), T(1)}; }
  /// Its conjugate (1 - sqrt(-7))/2.
  static QuadElem pi2_bar() { return {T(1), T(-1)}; }

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.u + y.u, x.v + y.v}; }
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.u - y.u, x.v - y.v}; }
  friend QuadElem operator-(const QuadElem& x) { return {-x.u, -x.v}; }

  // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2 and w^2 = w - 2.
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    T bd = x.v * y.v;
    return {x.u * y.u - 2 * bd, x.u * y.v + x.v * y.u + bd};
  }

  QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.u == y.u && x.v == y.v; }
};

template <class T>
QuadElem<T> conj(const QuadElem<T>& x) {
  // conj(w) = 1 - w.
  return {x.u + x.v, -x.v};
}

template <class T>
T norm(const QuadElem<T>& x) {
  return x.u * x.u + x.u * x.v + 2 * x.v * x.v;
}

template <class T>
QuadElem<T> pow(QuadElem<T> base, unsigned n) {
  QuadElem<T> r = QuadElem<T>::one();
  while (n) {
    if (n & 1u) r *= base;
    base *= base;
    n >>= 1u;
  }
  return r;
}

/// Doubled coordinates in the basis (1, sqrt(-7)): x = (a2 + b2*sqrt(-7))/2.
template <class T>
std::pair<T, T> to_half_coords(const QuadElem<T>& x) {
  return {2 * x.u + x.v, x.v};
}

/// Inverse of to_half_coords; requires a2 and b2 of equal parity.
inline QuadElem<Int> from_half_coords(const Int& a2, const Int& b2) {
  if (mod(a2 - b2, Int(2)) != 0) throw std::invalid_argument("half coordinates of mixed parity");
  return {(a2 - b2) / 2, b2};
}

using QuadInt = QuadElem<Int>;

template <class T>
std::ostream& operator<<(std::ostream& os, const QuadElem<T>& x) {
  return os << '(' << x.u << ", " << x.v << ')';
}

}  // namespace nagell
