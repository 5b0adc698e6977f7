#pragma once

// Derivative matrices of log g, degeneracy of the central coordinate and
// the search for products of affine translates that restore full rank.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/heisenberg.hpp"
#include "waring/linalg.hpp"
#include "waring/polynomial.hpp"
#include "waring/polyseq.hpp"
#include "waring/rational.hpp"

namespace waring {

/// Row k-1 holds the k-th derivatives of (a_1..a_n, b_1..b_n, d) at x0.
struct JacobianMatrix {
  std::size_t n = 0;
  unsigned B = 0;
  Integer x0 = 0;
  RationalMatrix entries;

  // The first 2n columns (derivatives of a and b).
  RationalMatrix j0() const { return entries.columns(0, 2 * n); }
  // The last column (derivatives of d).
  std::vector<Rational> last_column() const { return entries.column(2 * n); }
};

/// d(x) = u.a(x) + v.b(x) + w.
struct DegeneracyCertificate {
  std::vector<Rational> u;
  std::vector<Rational> v;
  Rational w = 0;

  friend bool operator==(const DegeneracyCertificate&, const DegeneracyCertificate&) = default;
};

/// h(x) = g(a_1 x + b_1) ... g(a_m x + b_m).
struct TranslateProductSpec {
  std::vector<std::pair<Integer, Integer>> pairs;

  std::size_t m() const { return pairs.size(); }

  friend bool operator==(const TranslateProductSpec&, const TranslateProductSpec&) = default;
};

namespace detail {

inline RationalMatrix derivative_matrix(const std::vector<Polynomial>& columns, const Integer& x0,
                                        unsigned B) {
  RationalMatrix m(B, columns.size());
  const Rational at(x0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (unsigned k = 1; k <= B; ++k) m(k - 1, j) = columns[j].derivative(k)(at);
  }
  return m;
}

inline std::vector<Polynomial> log_columns(const HeisPolySeq& g) {
  std::vector<Polynomial> cols = g.a();
  cols.insert(cols.end(), g.b().begin(), g.b().end());
  cols.push_back(g.d());
  return cols;
}

}  // namespace detail

inline JacobianMatrix jacobian_of_log(const HeisPolySeq& g, const Integer& x0, unsigned B) {
  if (x0 < 0) throw std::invalid_argument("evaluation point must be nonnegative");
  return {g.n(), B, x0, detail::derivative_matrix(detail::log_columns(g), x0, B)};
}

inline std::size_t rank(const JacobianMatrix& j) { return rank(j.entries); }

/// Solves d = u.a + v.b + w over Q in coefficient space.
inline std::optional<DegeneracyCertificate> detect_degenerate(const HeisPolySeq& g) {
  const std::size_t n = g.n();
  const Polynomial d = g.d();
  std::vector<Polynomial> basis = g.a();
  basis.insert(basis.end(), g.b().begin(), g.b().end());
  basis.push_back(Polynomial::constant(1));
  int top = d.degree();
  for (const auto& p : basis) top = std::max(top, p.degree());
  RationalMatrix system(static_cast<std::size_t>(top) + 1, basis.size());
  std::vector<Rational> rhs(static_cast<std::size_t>(top) + 1);
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) system(k, j) = basis[j].coeff(k);
    rhs[k] = d.coeff(k);
  }
  const auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  DegeneracyCertificate cert;
  cert.u.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(n));
  cert.v.assign(x->begin() + static_cast<std::ptrdiff_t>(n), x->begin() + static_cast<std::ptrdiff_t>(2 * n));
  cert.w = x->back();
  return cert;
}

/// Jacobian of (1/2)[log g(a1 x + b1), log g(a2 x + b2)]: only the last
/// column can be nonzero.
inline JacobianMatrix commutator_jacobian(const HeisPolySeq& g, const std::pair<Integer, Integer>& spec1,
                                          const std::pair<Integer, Integer>& spec2, const Integer& x0,
                                          unsigned B) {
  const HeisPolySeq g1 = affine_translate(g, spec1.first, spec1.second);
  const HeisPolySeq g2 = affine_translate(g, spec2.first, spec2.second);
  const LieElement<Polynomial> half = bracket(g1.log(), g2.log()) * Rational(1, 2);
  std::vector<Polynomial> cols(2 * g.n(), Polynomial());
  cols.push_back(half.d);
  return {g.n(), B, x0, detail::derivative_matrix(cols, x0, B)};
}

inline HeisPolySeq translate_product(const HeisPolySeq& g, const TranslateProductSpec& spec) {
  if (spec.pairs.empty()) throw std::invalid_argument("translate product needs at least one pair");
  HeisElement<Polynomial> acc = HeisElement<Polynomial>::identity(g.n());
  for (const auto& [a, b] : spec.pairs) acc = mul(acc, affine_translate(g, a, b).element());
  return HeisPolySeq(acc);
}

// Rows used for a sequence: its degree bound, but never fewer than the
// largest entry degree of log g.
inline unsigned jacobian_rows(const HeisPolySeq& g) {
  int rows = degree_bound_B(g).B;
  rows = std::max(rows, g.d().degree());
  return static_cast<unsigned>(std::max(rows, 1));
}

struct Lemma4DegOptions {
  unsigned m_max = 3;
  unsigned coeff_bound = 4;
  // Vary b per factor instead of sharing one b across the product.
  bool per_pair_b = false;
};

namespace detail {

// Calls visit(tuple) for nondecreasing tuples of length m over [lo, hi];
// stops early when visit returns true.
template <class Visit>
bool for_each_nondecreasing(unsigned m, unsigned lo, unsigned hi, Visit&& visit) {
  std::vector<unsigned> t(m, lo);
  if (m == 0 || lo > hi) return false;
  while (true) {
    if (visit(t)) return true;
    std::size_t i = m;
    while (i > 0 && t[i - 1] == hi) --i;
    if (i == 0) return false;
    const unsigned next = t[i - 1] + 1;
    for (std::size_t j = i - 1; j < m; ++j) t[j] = next;
  }
}

template <class Visit>
bool for_each_tuple(unsigned m, unsigned lo, unsigned hi, Visit&& visit) {
  std::vector<unsigned> t(m, lo);
  if (m == 0 || lo > hi) return false;
  while (true) {
    if (visit(t)) return true;
    std::size_t i = m;
    while (i > 0 && t[i - 1] == hi) --i;
    if (i == 0) return false;
    ++t[i - 1];
    for (std::size_t j = i; j < m; ++j) t[j] = lo;
  }
}

}  // namespace detail

/// First spec, in order of increasing m, then b, then nondecreasing a
/// tuples, whose translate product has a rank 2n+1 jacobian at 0.
inline std::optional<TranslateProductSpec> lemma4deg_search(const HeisPolySeq& g, const Lemma4DegOptions& opt) {
  const std::size_t full = 2 * g.n() + 1;
  std::optional<TranslateProductSpec> found;
  auto try_spec = [&](TranslateProductSpec spec) {
    const HeisPolySeq h = translate_product(g, spec);
    if (rank(jacobian_of_log(h, 0, jacobian_rows(h))) == full) {
      found = std::move(spec);
      return true;
    }
    return false;
  };
  for (unsigned m = 1; m <= opt.m_max; ++m) {
    if (opt.per_pair_b) {
      const bool done = detail::for_each_tuple(m, 0, opt.coeff_bound, [&](const std::vector<unsigned>& bs) {
        return detail::for_each_nondecreasing(m, 1, opt.coeff_bound, [&](const std::vector<unsigned>& as) {
          TranslateProductSpec spec;
          for (unsigned i = 0; i < m; ++i) spec.pairs.emplace_back(as[i], bs[i]);
          return try_spec(std::move(spec));
        });
      });
      if (done) return found;
      continue;
    }
    for (unsigned b = 0; b <= opt.coeff_bound; ++b) {
      const bool done = detail::for_each_nondecreasing(m, 1, opt.coeff_bound, [&](const std::vector<unsigned>& as) {
        TranslateProductSpec spec;
        for (unsigned a : as) spec.pairs.emplace_back(a, b);
        return try_spec(std::move(spec));
      });
      if (done) return found;
    }
  }
  return std::nullopt;
}

inline std::optional<TranslateProductSpec> lemma4deg_search(const HeisPolySeq& g, unsigned m_max,
                                                            unsigned coeff_bound) {
  return lemma4deg_search(g, Lemma4DegOptions{m_max, coeff_bound, false});
}

}  // namespace waring
