#pragma once

// The Heisenberg group H_{2n+1} and its Lie algebra in (a, b, c)
// coordinates:
//
//   (a, b, c) . (a', b', c') = (a + a', b + b', c + c' + a.b')
//
// Group elements and Lie elements are templated over the coordinate ring
// R so that the same formulas act on rationals, on univariate polynomial
// sequences and on multivariate ordered products. R must provide a zero
// via R{}, ring operations and multiplication by a Rational.

#include <cstddef>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

template <class R>
struct HeisElement {
  std::vector<R> a;
  std::vector<R> b;
  R c{};

  std::size_t n() const { return a.size(); }

  static HeisElement identity(std::size_t n) {
    return HeisElement{std::vector<R>(n, R{}), std::vector<R>(n, R{}), R{}};
  }

  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

/// Lie algebra element (a, b, d); d is the central coordinate.
template <class R>
struct LieElement {
  std::vector<R> a;
  std::vector<R> b;
  R d{};

  std::size_t n() const { return a.size(); }

  static LieElement zero(std::size_t n) {
    return LieElement{std::vector<R>(n, R{}), std::vector<R>(n, R{}), R{}};
  }

  friend bool operator==(const LieElement&, const LieElement&) = default;
};

using HeisPoint = HeisElement<Rational>;
using HeisLie = LieElement<Rational>;

namespace detail {

template <class V>
void require_same_n(const V& x, const V& y) {
  if (x.a.size() != y.a.size() || x.b.size() != y.b.size() || x.a.size() != x.b.size()) {
    throw DimensionMismatch("Heisenberg elements of different dimension");
  }
}

template <class R>
std::vector<R> add(const std::vector<R>& x, const std::vector<R>& y) {
  std::vector<R> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return out;
}

template <class R>
std::vector<R> negate(const std::vector<R>& x) {
  std::vector<R> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(-v);
  return out;
}

template <class R>
std::vector<R> scale(const std::vector<R>& x, const Rational& s) {
  std::vector<R> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(v * s);
  return out;
}

}  // namespace detail

template <class R>
R dot(const std::vector<R>& x, const std::vector<R>& y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot product of vectors of different length");
  R acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

template <class R>
HeisElement<R> mul(const HeisElement<R>& x, const HeisElement<R>& y) {
  detail::require_same_n(x, y);
  return {detail::add(x.a, y.a), detail::add(x.b, y.b), x.c + y.c + dot(x.a, y.b)};
}

// (a, b, c)^-1 = (-a, -b, -c + a.b)
template <class R>
HeisElement<R> inv(const HeisElement<R>& x) {
  return {detail::negate(x.a), detail::negate(x.b), -x.c + dot(x.a, x.b)};
}

// x y x^-1 = (a', b', c' + a.b' - a'.b)
template <class R>
HeisElement<R> conjugate(const HeisElement<R>& x, const HeisElement<R>& y) {
  detail::require_same_n(x, y);
  return {y.a, y.b, y.c + dot(x.a, y.b) - dot(y.a, x.b)};
}

// x y x^-1 y^-1 = (0, 0, a.b' - a'.b)
template <class R>
HeisElement<R> commutator(const HeisElement<R>& x, const HeisElement<R>& y) {
  detail::require_same_n(x, y);
  const std::size_t n = x.n();
  return {std::vector<R>(n, R{}), std::vector<R>(n, R{}), dot(x.a, y.b) - dot(y.a, x.b)};
}

/// u^T Omega v with Omega = [[0, I_n], [-I_n, 0]].
inline Rational symplectic_form(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw DimensionMismatch("symplectic form needs two vectors of equal even length");
  }
  const std::size_t n = u.size() / 2;
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += u[i] * v[n + i] - u[n + i] * v[i];
  return acc;
}

template <class R>
LieElement<R> log(const HeisElement<R>& x) {
  return {x.a, x.b, x.c - dot(x.a, x.b) * Rational(1, 2)};
}

template <class R>
HeisElement<R> exp(const LieElement<R>& y) {
  return {y.a, y.b, y.d + dot(y.a, y.b) * Rational(1, 2)};
}

template <class R>
LieElement<R> operator+(const LieElement<R>& x, const LieElement<R>& y) {
  detail::require_same_n(x, y);
  return {detail::add(x.a, y.a), detail::add(x.b, y.b), x.d + y.d};
}

template <class R>
LieElement<R> operator-(const LieElement<R>& x) {
  return {detail::negate(x.a), detail::negate(x.b), -x.d};
}

template <class R>
LieElement<R> operator*(const LieElement<R>& x, const Rational& s) {
  return {detail::scale(x.a, s), detail::scale(x.b, s), x.d * s};
}

// [X, Y] = (0, 0, a.b' - a'.b)
template <class R>
LieElement<R> bracket(const LieElement<R>& x, const LieElement<R>& y) {
  detail::require_same_n(x, y);
  const std::size_t n = x.n();
  return {std::vector<R>(n, R{}), std::vector<R>(n, R{}), dot(x.a, y.b) - dot(y.a, x.b)};
}

// exp(X) exp(Y) = exp(X + Y + [X, Y]/2); exact in nilpotency class 2.
template <class R>
LieElement<R> bch(const LieElement<R>& x, const LieElement<R>& y) {
  return x + y + bracket(x, y) * Rational(1, 2);
}

template <class R>
HeisElement<R> pow(const HeisElement<R>& x, long k) {
  if (k < 0) return pow(inv(x), -k);
  HeisElement<R> acc = HeisElement<R>::identity(x.n());
  HeisElement<R> base = x;
  auto e = static_cast<unsigned long>(k);
  while (e != 0) {
    if (e & 1UL) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return acc;
}

// iota: c -> c + a.b/2 and delta: c -> c - a.b/2, mutually inverse.
template <class R>
HeisElement<R> iota(const HeisElement<R>& x) {
  return {x.a, x.b, x.c + dot(x.a, x.b) * Rational(1, 2)};
}

template <class R>
HeisElement<R> delta(const HeisElement<R>& x) {
  return {x.a, x.b, x.c - dot(x.a, x.b) * Rational(1, 2)};
}

inline bool is_integral(const HeisPoint& x) {
  for (const auto& v : x.a) {
    if (!is_integer(v)) return false;
  }
  for (const auto& v : x.b) {
    if (!is_integer(v)) return false;
  }
  return is_integer(x.c);
}

/// Principal congruence subgroup H_{2n+1}(DZ) for an even modulus D.
class CongruenceLattice {
 public:
  CongruenceLattice(std::size_t n, Integer modulus) : n_(n), modulus_(std::move(modulus)) {
    if (modulus_ <= 0 || modulus_ % 2 != 0) {
      throw std::invalid_argument("congruence modulus must be a positive even integer");
    }
  }

  std::size_t n() const { return n_; }
  const Integer& modulus() const { return modulus_; }

 private:
  std::size_t n_;
  Integer modulus_;
};

inline bool lattice_member(const CongruenceLattice& lattice, const HeisPoint& x) {
  if (x.n() != lattice.n()) throw DimensionMismatch("point dimension differs from lattice");
  if (!is_integral(x)) throw NotIntegral("lattice membership needs an integral point");
  auto divisible = [&](const Rational& v) { return v.get_num() % lattice.modulus() == 0; };
  for (const auto& v : x.a) {
    if (!divisible(v)) return false;
  }
  for (const auto& v : x.b) {
    if (!divisible(v)) return false;
  }
  return divisible(x.c);
}

inline HeisPoint make_point(std::vector<Rational> a, std::vector<Rational> b, Rational c) {
  if (a.size() != b.size()) throw DimensionMismatch("a and b must have equal length");
  return HeisPoint{std::move(a), std::move(b), std::move(c)};
}

inline std::string to_string(const HeisPoint& x) {
  std::string s = "(";
  auto vec = [&](const std::vector<Rational>& v) {
    s += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += v[i].get_str();
    }
    s += "]";
  };
  vec(x.a);
  s += ",";
  vec(x.b);
  s += "," + x.c.get_str() + ")";
  return s;
}

}  // namespace waring
