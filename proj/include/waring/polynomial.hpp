#pragma once

#include <algorithm>
#include <climits>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Degree reported for the zero polynomial.
inline constexpr int kNegInfinity = INT_MIN;

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree order. The coefficient vector never carries trailing
/// zeros, so the zero polynomial has an empty vector and degree kNegInfinity.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  static Polynomial monomial(const Rational& c, unsigned k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(1, 1); }

  // binom(x, k) = x(x-1)...(x-k+1)/k!
  static Polynomial binomial_basis(unsigned k) {
    Polynomial p = constant(1);
    for (unsigned i = 0; i < k; ++i) {
      p = p * Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
    }
    return p * Rational(1, factorial(k));
  }

  int degree() const {
    return coeffs_.empty() ? kNegInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational leading_coeff() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial derivative(unsigned order = 1) const {
    if (order == 0) return *this;
    if (static_cast<int>(order) > degree()) return {};
    std::vector<Rational> out(coeffs_.size() - order);
    for (std::size_t k = order; k < coeffs_.size(); ++k) {
      Integer falling = 1;
      for (unsigned j = 0; j < order; ++j) falling *= static_cast<unsigned long>(k - j);
      out[k - order] = coeffs_[k] * Rational(falling);
    }
    return Polynomial(std::move(out));
  }

  // Returns p(inner(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + constant(*it);
    }
    return acc;
  }

  Polynomial affine(const Rational& a, const Rational& b) const {
    return compose(Polynomial({b, a}));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(Polynomial l, const Rational& s) { return l *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial r) { return r *= s; }

  friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Rational> out(l.coeffs_.size() + r.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
      if (l.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
        out[i + j] += l.coeffs_[i] * r.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& l, const Polynomial& r) {
    return l.coeffs_ == r.coeffs_;
  }

  // Human-readable form, highest degree first, e.g. "1/2*x^3 + x".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != 1) {
        os << mag.get_str();
        if (k > 0) os << "*";
      }
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  // Caller-built mpq values may be unreduced; gmp arithmetic assumes they are not.
  void normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace waring
