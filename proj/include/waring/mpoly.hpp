#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

namespace waring {

/// Sparse multivariate polynomial over Q. Terms live in an ordered map
/// keyed by exponent vectors, so iteration order is lexicographic with the
/// first variable most significant and the last entry is the lex-leading
/// term. Zero coefficients are never stored.
///
/// Operands with different variable counts are combined by widening the
/// smaller one, which lets constants (0 variables) mix with anything.
class MultiPolynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPolynomial() = default;
  explicit MultiPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static MultiPolynomial constant(std::size_t nvars, const Rational& c) {
    MultiPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPolynomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    MultiPolynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = power;
    p.add_term(e, 1);
    return p;
  }

  // f(x_index) viewed as a polynomial in nvars variables.
  static MultiPolynomial from_univariate(const Polynomial& f, std::size_t nvars, std::size_t index) {
    MultiPolynomial p(nvars);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      Exponents e(nvars, 0);
      e.at(index) = static_cast<unsigned>(k);
      p.add_term(e, f.coeffs()[k]);
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (e.size() != nvars_) throw DimensionMismatch("exponent vector length differs from nvars");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int best = kNegInfinity;
    for (const auto& [e, c] : terms_) {
      best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0U)));
    }
    return best;
  }

  Rational operator()(const std::vector<Rational>& point) const {
    if (point.size() < nvars_) throw DimensionMismatch("too few evaluation coordinates");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] != 0) term *= pow(point[i], e[i]);
      }
      acc += term;
    }
    return acc;
  }

  // Substitutes univariate polynomials for every variable.
  Polynomial substitute(const std::vector<Polynomial>& values) const {
    if (values.size() < nvars_) throw DimensionMismatch("too few substitution values");
    std::vector<std::vector<Polynomial>> powers(nvars_);
    Polynomial acc;
    for (const auto& [e, c] : terms_) {
      Polynomial term = Polynomial::constant(c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(1));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * values[i]);
        term *= cache[e[i]];
      }
      acc += term;
    }
    return acc;
  }

  // Substitutes multivariate polynomials for every variable.
  MultiPolynomial compose(const std::vector<MultiPolynomial>& values) const {
    if (values.size() < nvars_) throw DimensionMismatch("too few substitution values");
    std::vector<std::vector<MultiPolynomial>> powers(nvars_);
    MultiPolynomial acc;
    for (const auto& [e, c] : terms_) {
      MultiPolynomial term = constant(0, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(0, 1));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * values[i]);
        term = term * cache[e[i]];
      }
      acc += term;
    }
    return acc;
  }

  // Renames variable i to perm[i].
  MultiPolynomial permuted(const std::vector<std::size_t>& perm) const {
    MultiPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f(nvars_, 0);
      for (std::size_t i = 0; i < nvars_; ++i) f.at(perm.at(i)) = e[i];
      out.add_term(f, c);
    }
    return out;
  }

  MultiPolynomial swapped(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> perm(nvars_);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm.at(i), perm.at(j));
    return permuted(perm);
  }

  // Invariance under the adjacent transpositions, which generate S_n.
  bool is_symmetric() const {
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
      if (swapped(i, i + 1) != *this) return false;
    }
    return true;
  }

  MultiPolynomial widened(std::size_t nvars) const {
    if (nvars < nvars_) throw DimensionMismatch("cannot narrow a polynomial");
    if (nvars == nvars_) return *this;
    MultiPolynomial out(nvars);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f.resize(nvars, 0);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  MultiPolynomial operator-() const {
    MultiPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  MultiPolynomial& operator+=(const MultiPolynomial& o) {
    align(o.nvars_);
    if (o.nvars_ == nvars_) {
      for (const auto& [e, c] : o.terms_) add_term(e, c);
    } else {
      for (const auto& [e, c] : o.widened(nvars_).terms_) add_term(e, c);
    }
    return *this;
  }

  MultiPolynomial& operator-=(const MultiPolynomial& o) { return *this += -o; }

  MultiPolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPolynomial operator+(MultiPolynomial l, const MultiPolynomial& r) { return l += r; }
  friend MultiPolynomial operator-(MultiPolynomial l, const MultiPolynomial& r) { return l -= r; }
  friend MultiPolynomial operator*(MultiPolynomial l, const Rational& s) { return l *= s; }
  friend MultiPolynomial operator*(const Rational& s, MultiPolynomial r) { return r *= s; }

  friend MultiPolynomial operator*(const MultiPolynomial& l, const MultiPolynomial& r) {
    const std::size_t n = std::max(l.nvars_, r.nvars_);
    MultiPolynomial l_storage;
    MultiPolynomial r_storage;
    const MultiPolynomial* lp = &l;
    const MultiPolynomial* rw = &r;
    if (l.nvars_ != n) {
      l_storage = l.widened(n);
      lp = &l_storage;
    }
    if (r.nvars_ != n) {
      r_storage = r.widened(n);
      rw = &r_storage;
    }
    MultiPolynomial out(n);
    Exponents e(n);
    for (const auto& [le, lc] : lp->terms_) {
      for (const auto& [re, rc] : rw->terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = le[i] + re[i];
        out.add_term(e, lc * rc);
      }
    }
    return out;
  }

  MultiPolynomial& operator*=(const MultiPolynomial& o) { return *this = *this * o; }

  // Equality up to widening with unused variables.
  friend bool operator==(const MultiPolynomial& l, const MultiPolynomial& r) {
    if (l.nvars_ == r.nvars_) return l.terms_ == r.terms_;
    const std::size_t n = std::max(l.nvars_, r.nvars_);
    return l.widened(n).terms_ == r.widened(n).terms_;
  }

  std::string str(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned k) { return k != 0; });
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool need_star = false;
      if (!has_vars || mag != 1) {
        os << mag.get_str();
        need_star = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        os << var << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void align(std::size_t nvars) {
    if (nvars > nvars_) *this = widened(nvars);
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

}  // namespace waring
