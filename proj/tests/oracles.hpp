#pragma once

// Independent reference computations for the test suites. Nothing here
// calls the group law, the binomial basis or the solvers under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "waring/heisenberg.hpp"
#include "waring/polynomial.hpp"
#include "waring/polyseq.hpp"
#include "waring/rankcheck.hpp"

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using QMat = std::vector<std::vector<Q>>;

// (a, b, c) as the (n+2)x(n+2) matrix [[1, a, c], [0, I, b], [0, 0, 1]].
inline QMat to_matrix(const waring::HeisPoint& x) {
  const std::size_t n = x.a.size();
  QMat m(n + 2, std::vector<Q>(n + 2, Q(0)));
  for (std::size_t i = 0; i < n + 2; ++i) m[i][i] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j + 1] = x.a[j];
    m[j + 1][n + 1] = x.b[j];
  }
  m[0][n + 1] = x.c;
  return m;
}

inline waring::HeisPoint from_matrix(const QMat& m) {
  const std::size_t n = m.size() - 2;
  waring::HeisPoint x;
  for (std::size_t j = 0; j < n; ++j) {
    x.a.push_back(m[0][j + 1]);
    x.b.push_back(m[j + 1][n + 1]);
  }
  x.c = m[0][n + 1];
  return x;
}

inline QMat matmul(const QMat& l, const QMat& r) {
  QMat out(l.size(), std::vector<Q>(r[0].size(), Q(0)));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      for (std::size_t j = 0; j < r[0].size(); ++j) out[i][j] += l[i][k] * r[k][j];
    }
  }
  return out;
}

inline waring::HeisPoint matrix_product(const std::vector<waring::HeisPoint>& xs) {
  QMat acc = to_matrix(waring::HeisPoint::identity(xs.empty() ? 1 : xs.front().a.size()));
  for (const auto& x : xs) acc = matmul(acc, to_matrix(x));
  return from_matrix(acc);
}

// Direct evaluation of every coordinate polynomial, no group law.
inline waring::HeisPoint eval_seq(const waring::HeisPolySeq& g, const Z& x) {
  waring::HeisPoint p;
  for (const auto& f : g.a()) p.a.push_back(f(Q(x)));
  for (const auto& f : g.b()) p.b.push_back(f(Q(x)));
  p.c = g.c()(Q(x));
  return p;
}

// Nilpotent matrix logarithm of a unitriangular 3x3-block matrix:
// log(I + N) = N - N^2/2 since N^3 = 0.
inline QMat matrix_log(const QMat& m) {
  QMat n = m;
  for (std::size_t i = 0; i < n.size(); ++i) n[i][i] -= 1;
  const QMat n2 = matmul(n, n);
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) n[i][j] -= n2[i][j] / 2;
  }
  return n;
}

inline Z gcd_brute(const waring::Polynomial& f, long upto) {
  Z g = 0;
  for (long x = 0; x <= upto; ++x) {
    const Q v = f(Q(x));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  return g;
}

// Largest non-representable integer by reachability up to a safe limit.
inline long frobenius_brute(const std::vector<long>& gens) {
  const long mx = *std::max_element(gens.begin(), gens.end());
  const long limit = mx * mx + 2 * mx + 10;
  std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
  reach[0] = true;
  for (long t = 1; t <= limit; ++t) {
    for (long g : gens) {
      if (g <= t && reach[static_cast<std::size_t>(t - g)]) {
        reach[static_cast<std::size_t>(t)] = true;
        break;
      }
    }
  }
  long last = -1;
  for (long t = 0; t <= limit; ++t) {
    if (!reach[static_cast<std::size_t>(t)]) last = t;
  }
  return last;
}

// Every (s_1..s_n) realized by N values in [0, top].
inline std::set<std::vector<long>> power_sum_table(unsigned N, unsigned n, long top) {
  std::set<std::vector<long>> out;
  std::vector<long> x(N, 0);
  while (true) {
    std::vector<long> s(n, 0);
    for (long v : x) {
      long p = 1;
      for (unsigned nu = 0; nu < n; ++nu) {
        p *= v;
        s[nu] += p;
      }
    }
    out.insert(s);
    std::size_t i = N;
    while (i > 0 && x[i - 1] == top) --i;
    if (i == 0) break;
    const long next = x[i - 1] + 1;
    for (std::size_t j = i - 1; j < N; ++j) x[j] = next;
  }
  return out;
}

// Newton divided differences through (i, values[i]), i = 0..k, expanded.
inline std::vector<Q> interpolate(const std::vector<Q>& values) {
  const std::size_t k = values.size();
  std::vector<Q> dd = values;
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Q(static_cast<long>(level));
  }
  std::vector<Q> coeffs(k, Q(0));
  std::vector<Q> basis{Q(1)};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
    std::vector<Q> next(basis.size() + 1, Q(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * Q(static_cast<long>(i));
    }
    basis = next;
  }
  return coeffs;
}

inline std::size_t rank_gauss(QMat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Rank of the derivative matrix of log h at 0, for
// h(x) = g(a_1 x + b_1)...g(a_m x + b_m), computed from matrix products at
// sample points and interpolation.
inline std::size_t translate_product_rank(const waring::HeisPolySeq& g, const waring::TranslateProductSpec& spec,
                                          unsigned rows) {
  const std::size_t n = g.n();
  int deg = 0;
  for (const auto& f : g.a()) deg = std::max(deg, f.degree());
  for (const auto& f : g.b()) deg = std::max(deg, f.degree());
  deg = std::max(deg, g.c().degree());
  const auto points = static_cast<std::size_t>(2 * deg + 2);
  std::vector<std::vector<Q>> coord(2 * n + 1);
  for (std::size_t x = 0; x < points; ++x) {
    QMat acc = to_matrix(waring::HeisPoint::identity(n));
    for (const auto& [a, b] : spec.pairs) acc = matmul(acc, to_matrix(eval_seq(g, a * Z(static_cast<long>(x)) + b)));
    const QMat lg = matrix_log(acc);
    for (std::size_t j = 0; j < n; ++j) {
      coord[j].push_back(lg[0][j + 1]);
      coord[n + j].push_back(lg[j + 1][n + 1]);
    }
    coord[2 * n].push_back(lg[0][n + 1]);
  }
  QMat jac(rows, std::vector<Q>(2 * n + 1, Q(0)));
  for (std::size_t col = 0; col < coord.size(); ++col) {
    const std::vector<Q> poly = interpolate(coord[col]);
    Z fact = 1;
    for (unsigned k = 1; k <= rows; ++k) {
      fact *= k;
      if (k < poly.size()) jac[k - 1][col] = poly[k] * Q(fact);
    }
  }
  return rank_gauss(jac);
}

inline waring::HeisPoint random_point(std::mt19937_64& rng, std::size_t n, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  waring::HeisPoint p = waring::HeisPoint::identity(n);
  for (auto& v : p.a) v = d(rng);
  for (auto& v : p.b) v = d(rng);
  p.c = d(rng);
  return p;
}

inline waring::HeisLie random_lie(std::mt19937_64& rng, std::size_t n, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  std::uniform_int_distribution<long> den(1, 4);
  waring::HeisLie y = waring::HeisLie::zero(n);
  for (auto& v : y.a) v = Q(d(rng), den(rng));
  for (auto& v : y.b) v = Q(d(rng), den(rng));
  y.d = Q(d(rng), den(rng));
  for (auto& v : y.a) v.canonicalize();
  for (auto& v : y.b) v.canonicalize();
  y.d.canonicalize();
  return y;
}

// f = sum c_k binom(x, k) with random integer c_k, built from scratch.
inline waring::Polynomial random_integer_valued(std::mt19937_64& rng, int degree, long span) {
  std::uniform_int_distribution<long> d(-span, span);
  waring::Polynomial f;
  waring::Polynomial falling = waring::Polynomial::constant(1);
  Z fact = 1;
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) {
      falling = falling * waring::Polynomial({Q(-(k - 1)), Q(1)});
      fact *= k;
    }
    Q coeff(Z(d(rng)), fact);
    coeff.canonicalize();
    f += falling * coeff;
  }
  return f;
}

inline waring::HeisPolySeq random_sequence(std::mt19937_64& rng, std::size_t n, int degree) {
  std::vector<waring::Polynomial> a;
  std::vector<waring::Polynomial> b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(random_integer_valued(rng, degree, 3));
    b.push_back(random_integer_valued(rng, degree, 3));
  }
  return waring::HeisPolySeq(a, b, random_integer_valued(rng, degree, 3));
}

}  // namespace oracle
