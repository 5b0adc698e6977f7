#pragma once

// Integer-valued polynomials: the binomial basis, integrality tests,
// Lagrange interpolation on consecutive integers and the three ways of
// computing gcd f(N0).

#include <optional>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

namespace waring {

/// Coordinates (a_0, ..., a_d) of f = sum a_k binom(x, k).
struct BinomialBasisPoly {
  std::vector<Integer> a;

  friend bool operator==(const BinomialBasisPoly&, const BinomialBasisPoly&) = default;
};

/// The d+1 consecutive integers {start, ..., start + degree}.
struct LagrangeNodeSet {
  Integer start = 0;
  unsigned degree = 0;

  std::vector<Integer> nodes() const {
    std::vector<Integer> out;
    out.reserve(degree + 1);
    for (unsigned i = 0; i <= degree; ++i) out.push_back(start + i);
    return out;
  }
};

namespace detail {

// Forward-difference table of f over 0..d; entry k is (Delta^k f)(0).
inline std::vector<Rational> forward_differences_at_zero(const Polynomial& f) {
  const int d = f.degree();
  if (d == kNegInfinity) return {};
  std::vector<Rational> row;
  row.reserve(d + 1);
  for (int x = 0; x <= d; ++x) row.push_back(f(Rational(x)));
  std::vector<Rational> out;
  out.reserve(d + 1);
  for (int k = 0; k <= d; ++k) {
    out.push_back(row[0]);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

}  // namespace detail

// f(0), ..., f(deg f) all integral; this is equivalent to f(Z) in Z.
inline bool is_integer_valued(const Polynomial& f) {
  const int d = f.degree();
  for (int x = 0; x <= d; ++x) {
    if (!is_integer(f(Rational(x)))) return false;
  }
  return true;
}

inline BinomialBasisPoly to_binomial_basis(const Polynomial& f) {
  BinomialBasisPoly out;
  for (const auto& delta : detail::forward_differences_at_zero(f)) {
    if (!is_integer(delta)) throw NotIntegerValued(f.str());
    out.a.push_back(delta.get_num());
  }
  return out;
}

inline Polynomial from_binomial_basis(const BinomialBasisPoly& p) {
  Polynomial f;
  for (std::size_t k = 0; k < p.a.size(); ++k) {
    if (p.a[k] == 0) continue;
    f += Polynomial::binomial_basis(static_cast<unsigned>(k)) * Rational(p.a[k]);
  }
  return f;
}

inline Integer gcd_values_binomial(const Polynomial& f) {
  return gcd(std::span<const Integer>(to_binomial_basis(f).a));
}

// gcd of f over {a, ..., a + deg f}.
inline Integer gcd_values_lagrange(const Polynomial& f, const Integer& a) {
  if (f.is_zero()) return 0;
  if (!is_integer_valued(f)) throw NotIntegerValued(f.str());
  LagrangeNodeSet nodes{a, static_cast<unsigned>(f.degree())};
  Integer g = 0;
  for (const auto& x : nodes.nodes()) g = gcd(g, f(Rational(x)).get_num());
  return g;
}

/// Scans 0 <= m1 < m2 <= search_bound in lexicographic order for a pair
/// with gcd(f(m1), f(m2)) = 1; such a pair certifies gcd f(N0) = 1.
inline std::optional<std::pair<Integer, Integer>> gcd_is_one_by_pair(const Polynomial& f,
                                                                     const Integer& search_bound) {
  if (search_bound < 1) return std::nullopt;
  const long bound = to_int64(search_bound);
  std::vector<Integer> values;
  values.reserve(bound + 1);
  for (long x = 0; x <= bound; ++x) {
    Rational v = f(Rational(x));
    if (!is_integer(v)) throw NotIntegerValued(f.str());
    values.push_back(v.get_num());
  }
  for (long m1 = 0; m1 <= bound; ++m1) {
    for (long m2 = m1 + 1; m2 <= bound; ++m2) {
      if (gcd(values[m1], values[m2]) == 1) return std::pair<Integer, Integer>(m1, m2);
    }
  }
  return std::nullopt;
}

/// The unique polynomial of degree <= d through (a + i, values[i]),
/// built from the Lagrange basis on d+1 consecutive integers.
inline Polynomial lagrange_interpolate(const std::vector<Integer>& values, const Integer& a) {
  const std::size_t count = values.size();
  Polynomial f;
  for (std::size_t i = 0; i < count; ++i) {
    if (values[i] == 0) continue;
    Polynomial basis = Polynomial::constant(1);
    Rational denom = 1;
    for (std::size_t k = 0; k < count; ++k) {
      if (k == i) continue;
      basis *= Polynomial({Rational(-(a + static_cast<unsigned long>(k))), Rational(1)});
      denom *= Rational(static_cast<long>(i) - static_cast<long>(k));
    }
    f += basis * (Rational(values[i]) / denom);
  }
  return f;
}

}  // namespace waring
