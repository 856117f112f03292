#pragma once

// Elements of Q(theta) = Q[x]/(m) in the power basis 1, theta, ...,
// theta^(d-1), with exact arithmetic, norms and complex embeddings.

#include "nagell/integer.hpp"
#include "nagell/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace nagell {

class NumberField {
 public:
  /// The rationals, as the degree-one field Q[x]/(x).
  NumberField() : NumberField(IntPoly(std::vector<Int>{0, 1})) {}
  explicit NumberField(IntPoly minpoly) : m_(std::move(minpoly)), mq_(to_rational(m_)) {
    if (m_.degree() < 1) throw std::invalid_argument("field polynomial must have positive degree");
  }

  int degree() const { return m_.degree(); }
  const IntPoly& minpoly() const { return m_; }
  const RatPoly& minpoly_q() const { return mq_; }

  /// Complex roots of the defining polynomial (companion-matrix eigenvalues).
  std::vector<std::complex<double>> roots() const {
    const int d = degree();
    if (d == 1) return {std::complex<double>(-static_cast<double>(m_[0]) / static_cast<double>(m_[1]), 0.0)};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    const double lead = static_cast<double>(m_.leading());
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -static_cast<double>(m_[static_cast<std::size_t>(i)]) / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
  }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.m_ == b.m_; }

 private:
  IntPoly m_;
  RatPoly mq_;
};

class FieldElem {
 public:
  FieldElem() : k_(std::make_shared<NumberField>()), c_(1, Rational(0)) {}
  FieldElem(std::shared_ptr<const NumberField> k, std::vector<Rational> coords) : k_(std::move(k)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) > k_->degree()) c_ = reduce(RatPoly(c_));
    c_.resize(static_cast<std::size_t>(k_->degree()), Rational(0));
  }
  static FieldElem rational(std::shared_ptr<const NumberField> k, const Rational& x) {
    return FieldElem(std::move(k), std::vector<Rational>{x});
  }
  static FieldElem generator(std::shared_ptr<const NumberField> k) {
    return FieldElem(std::move(k), std::vector<Rational>{0, 1});
  }

  const NumberField& field() const { return *k_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return k_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    std::vector<Rational> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return FieldElem(a.k_, std::move(c));
  }
  friend FieldElem operator-(const FieldElem& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x = -x;
    return FieldElem(a.k_, std::move(c));
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return FieldElem(a.k_, a.reduce(RatPoly(a.c_) * RatPoly(b.c_)));
  }
  friend FieldElem operator-(const FieldElem& a, const Rational& q) { return a - rational(a.k_, q); }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return *a.k_ == *b.k_ && a.c_ == b.c_; }

  /// Norm as the determinant of multiplication by this element.
  Rational norm() const {
    const int d = k_->degree();
    RatMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int j = 0; j < d; ++j) {
      FieldElem basis(k_, std::vector<Rational>(static_cast<std::size_t>(j + 1), Rational(0)));
      basis.c_[static_cast<std::size_t>(j)] = 1;
      FieldElem col = *this * basis;
      for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.c_[static_cast<std::size_t>(i)];
    }
    return determinant(m);
  }

  /// Norm as Res(m, A) / lc(m)^deg(A), A the coordinate polynomial.
  Rational norm_by_resultant() const {
    RatPoly a(c_);
    if (a.is_zero()) return 0;
    const RatPoly& m = k_->minpoly_q();
    Rational r = sylvester_resultant(descending(m), descending(a));
    return r / pow(m.leading(), static_cast<unsigned>(a.degree()));
  }

  /// Image under each complex embedding.
  std::vector<std::complex<double>> embeddings() const {
    std::vector<std::complex<double>> out;
    for (const auto& z : k_->roots()) {
      std::complex<double> acc = 0;
      for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + static_cast<double>(c_[i]);
      out.push_back(acc);
    }
    return out;
  }

  std::string str(const char* var = "theta") const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::string term = to_string(c_[i] < 0 ? Rational(-c_[i]) : c_[i]);
      if (i > 0) term = (term == "1" ? std::string() : term + "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
      if (out.empty()) out = (c_[i] < 0 ? "-" : "") + term;
      else out += (c_[i] < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check(const FieldElem& a, const FieldElem& b) {
    if (!(*a.k_ == *b.k_)) throw std::invalid_argument("field elements from different fields");
  }
  std::vector<Rational> reduce(const RatPoly& p) const {
    RatPoly r = poly_rem(p, k_->minpoly_q());
    std::vector<Rational> c = r.coeffs();
    c.resize(static_cast<std::size_t>(k_->degree()), Rational(0));
    return c;
  }

  std::shared_ptr<const NumberField> k_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }

/// |sigma(x)| <= 2 sqrt(l) for every complex embedding sigma.
inline bool within_weil_bound(const FieldElem& x, std::int64_t l) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(l)) + 1e-9;
  for (const auto& z : x.embeddings())
    if (std::abs(z) > bound) return false;
  return true;
}

}  // namespace nagell
