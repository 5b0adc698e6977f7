#pragma once

// Polynomial sequences N0 -> H_{2n+1}(Z) and N0 -> U_n(Z): evaluation,
// finite differences, degree, ordered products, palindromic
// symmetrization and re-expression of symmetric entries in power sums.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/heisenberg.hpp"
#include "waring/intpoly.hpp"
#include "waring/linalg.hpp"
#include "waring/mpoly.hpp"
#include "waring/polynomial.hpp"
#include "waring/rational.hpp"

namespace waring {

/// g(x) = (a(x), b(x), c(x)) with integer-valued entries.
class HeisPolySeq {
 public:
  HeisPolySeq(std::vector<Polynomial> a, std::vector<Polynomial> b, Polynomial c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.size() != b_.size()) throw DimensionMismatch("a and b must have n entries each");
    for (const auto& p : a_) require_integer_valued(p);
    for (const auto& p : b_) require_integer_valued(p);
    require_integer_valued(c_);
  }

  explicit HeisPolySeq(const HeisElement<Polynomial>& g) : HeisPolySeq(g.a, g.b, g.c) {}

  std::size_t n() const { return a_.size(); }
  const std::vector<Polynomial>& a() const { return a_; }
  const std::vector<Polynomial>& b() const { return b_; }
  const Polynomial& c() const { return c_; }

  // d = c - a.b/2, the central coordinate of log g.
  Polynomial d() const { return c_ - dot(a_, b_) * Rational(1, 2); }

  HeisElement<Polynomial> element() const { return {a_, b_, c_}; }
  LieElement<Polynomial> log() const { return {a_, b_, d()}; }

  HeisPoint operator()(const Rational& x) const {
    HeisPoint p;
    for (const auto& f : a_) p.a.push_back(f(x));
    for (const auto& f : b_) p.b.push_back(f(x));
    p.c = c_(x);
    return p;
  }

  int max_degree() const {
    int d = c_.degree();
    for (const auto& f : a_) d = std::max(d, f.degree());
    for (const auto& f : b_) d = std::max(d, f.degree());
    return d;
  }

  bool is_constant() const { return max_degree() <= 0; }

  friend bool operator==(const HeisPolySeq&, const HeisPolySeq&) = default;

 private:
  static void require_integer_valued(const Polynomial& p) {
    if (!is_integer_valued(p)) throw NotIntegerValued(p.str());
  }

  std::vector<Polynomial> a_;
  std::vector<Polynomial> b_;
  Polynomial c_;
};

inline HeisPoint evaluate(const HeisPolySeq& g, const Integer& x) { return g(Rational(x)); }

/// Upper unitriangular polynomial matrix; entries(i, j) for i < j are used,
/// the diagonal is 1 and everything below it is 0 (indices are 0-based).
class UniTriPolySeq {
 public:
  explicit UniTriPolySeq(std::size_t n) : n_(n), entries_(n, std::vector<Polynomial>(n)) {}

  std::size_t n() const { return n_; }

  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  void set_entry(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= j || j >= n_) throw DimensionMismatch("unitriangular entries need i < j < n");
    if (!is_integer_valued(p)) throw NotIntegerValued(p.str());
    entries_[i][j] = std::move(p);
  }

  IntegerMatrix operator()(const Integer& x) const {
    IntegerMatrix m = IntegerMatrix::identity(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) m(i, j) = entries_[i][j](Rational(x)).get_num();
    }
    return m;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Polynomial>> entries_;
};

inline IntegerMatrix evaluate(const UniTriPolySeq& g, const Integer& x) { return g(x); }

/// The standard embedding of H_{2n+1} into U_{n+2}:
/// row 0 holds (1, a, c) and column n+1 holds (c, b, 1).
inline UniTriPolySeq to_unitriangular(const HeisPolySeq& g) {
  const std::size_t n = g.n();
  UniTriPolySeq u(n + 2);
  for (std::size_t j = 0; j < n; ++j) {
    u.set_entry(0, j + 1, g.a()[j]);
    u.set_entry(j + 1, n + 1, g.b()[j]);
  }
  u.set_entry(0, n + 1, g.c());
  return u;
}

/// A sequence N0 -> H_{2n+1}(Q) given by an evaluator.
struct GroupSequence {
  std::size_t n = 0;
  std::function<HeisPoint(std::int64_t)> at;

  static GroupSequence from(const HeisPolySeq& g) {
    return {g.n(), [g](std::int64_t x) { return g(Rational(x)); }};
  }

  // Explicit finite table; evaluation past the end throws.
  static GroupSequence from_table(std::vector<HeisPoint> table) {
    if (table.empty()) throw std::invalid_argument("sequence table must be nonempty");
    const std::size_t n = table.front().n();
    return {n, [t = std::move(table)](std::int64_t x) { return t.at(static_cast<std::size_t>(x)); }};
  }
};

enum class Side { kLeft, kRight };

// L_s g(t) = g(s+t) g(t)^-1 and R_s g(t) = g(t)^-1 g(s+t).
inline GroupSequence finite_difference(const GroupSequence& g, std::int64_t s, Side side) {
  auto base = g.at;
  if (side == Side::kLeft) {
    return {g.n, [base, s](std::int64_t t) { return mul(base(s + t), inv(base(t))); }};
  }
  return {g.n, [base, s](std::int64_t t) { return mul(inv(base(t)), base(s + t)); }};
}

namespace detail {

using Table = std::vector<HeisPoint>;

inline Table difference_table(const Table& values, std::size_t s, Side side) {
  Table out;
  out.reserve(values.size() - s);
  for (std::size_t t = 0; t + s < values.size(); ++t) {
    out.push_back(side == Side::kLeft ? mul(values[t + s], inv(values[t]))
                                      : mul(inv(values[t]), values[t + s]));
  }
  return out;
}

inline std::string table_key(const Table& values) {
  std::string key;
  for (const auto& p : values) key += to_string(p);
  return key;
}

inline bool is_identity_prefix(const Table& values, std::size_t count) {
  const HeisPoint e = HeisPoint::identity(values.front().n());
  for (std::size_t t = 0; t < count; ++t) {
    if (values[t] != e) return false;
  }
  return true;
}

// Longest chain of entry degrees i = k0 < k1 < ... < km = j, summed.
inline int chain_bound(const UniTriPolySeq& g) {
  const std::size_t n = g.n();
  // best[i][j]: maximal summed degree over chains from i to j.
  std::vector<std::vector<int>> best(n, std::vector<int>(n, kNegInfinity));
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t i = 0; i + len < n; ++i) {
      const std::size_t j = i + len;
      int value = g.entry(i, j).degree();
      for (std::size_t l = i + 1; l < j; ++l) {
        if (best[i][l] == kNegInfinity || best[l][j] == kNegInfinity) continue;
        value = std::max(value, best[i][l] + best[l][j]);
      }
      best[i][j] = value;
    }
  }
  int out = kNegInfinity;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out = std::max(out, best[i][j]);
  }
  return out;
}

}  // namespace detail

/// Least d such that every (d+1)-fold product of left and right differences
/// with shifts in {1..probe_bound} vanishes on {0..probe_bound}. Returns
/// kNegInfinity for the identity sequence; throws BoundTooSmall when no
/// d <= probe_bound works.
inline int degree(const GroupSequence& g, std::int64_t probe_bound) {
  if (probe_bound < 1) throw std::invalid_argument("probe bound must be positive");
  const auto p = static_cast<std::size_t>(probe_bound);
  const std::size_t window = p + 1;
  for (std::size_t depth = 0; depth <= p + 1; ++depth) {
    // Values on 0..p + depth*p leave a window of p+1 after depth differences.
    detail::Table values;
    for (std::size_t x = 0; x < window + depth * p; ++x) values.push_back(g.at(static_cast<std::int64_t>(x)));
    std::map<std::string, detail::Table> level{{detail::table_key(values), values}};
    for (std::size_t step = 0; step < depth; ++step) {
      std::map<std::string, detail::Table> next;
      for (const auto& [key, table] : level) {
        for (std::size_t s = 1; s <= p; ++s) {
          for (Side side : {Side::kLeft, Side::kRight}) {
            detail::Table diff = detail::difference_table(table, s, side);
            // Keep a uniform length so equal sequences share a key.
            diff.resize(table.size() - p);
            next.try_emplace(detail::table_key(diff), std::move(diff));
          }
        }
      }
      level = std::move(next);
    }
    const bool vanishes = std::all_of(level.begin(), level.end(), [&](const auto& entry) {
      return detail::is_identity_prefix(entry.second, window);
    });
    if (vanishes) return depth == 0 ? kNegInfinity : static_cast<int>(depth) - 1;
  }
  throw BoundTooSmall("differences do not vanish within probe bound " + std::to_string(probe_bound));
}

/// Symbolic ordered product g(x_1)...g(x_L) in L variables.
inline HeisElement<MultiPolynomial> ordered_product(const HeisPolySeq& g, std::size_t L) {
  if (L == 0) throw std::invalid_argument("ordered product needs L >= 1");
  auto factor = [&](std::size_t k) {
    HeisElement<MultiPolynomial> f;
    for (const auto& p : g.a()) f.a.push_back(MultiPolynomial::from_univariate(p, L, k));
    for (const auto& p : g.b()) f.b.push_back(MultiPolynomial::from_univariate(p, L, k));
    f.c = MultiPolynomial::from_univariate(g.c(), L, k);
    return f;
  };
  HeisElement<MultiPolynomial> acc = factor(0);
  for (std::size_t k = 1; k < L; ++k) acc = mul(acc, factor(k));
  return acc;
}

using PolyMatrix = std::vector<std::vector<MultiPolynomial>>;

inline PolyMatrix ordered_product(const UniTriPolySeq& g, std::size_t L) {
  if (L == 0) throw std::invalid_argument("ordered product needs L >= 1");
  const std::size_t n = g.n();
  auto factor = [&](std::size_t k) {
    PolyMatrix m(n, std::vector<MultiPolynomial>(n, MultiPolynomial(L)));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = MultiPolynomial::constant(L, 1);
      for (std::size_t j = i + 1; j < n; ++j) m[i][j] = MultiPolynomial::from_univariate(g.entry(i, j), L, k);
    }
    return m;
  };
  PolyMatrix acc = factor(0);
  for (std::size_t k = 1; k < L; ++k) {
    const PolyMatrix f = factor(k);
    PolyMatrix next(n, std::vector<MultiPolynomial>(n, MultiPolynomial(L)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t l = i; l <= j; ++l) next[i][j] += acc[i][l] * f[l][j];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

/// g(x_1)...g(x_L) g(x_L)...g(x_1), symmetric in x_1..x_L and equal to
/// exp(2 sum log g(x_i)).
inline HeisElement<MultiPolynomial> symmetrize(const HeisPolySeq& g, std::size_t L) {
  const HeisElement<MultiPolynomial> forward = ordered_product(g, L);
  std::vector<std::size_t> reversal(L);
  for (std::size_t i = 0; i < L; ++i) reversal[i] = L - 1 - i;
  HeisElement<MultiPolynomial> backward;
  for (const auto& p : forward.a) backward.a.push_back(p.permuted(reversal));
  for (const auto& p : forward.b) backward.b.push_back(p.permuted(reversal));
  backward.c = forward.c.permuted(reversal);
  return mul(forward, backward);
}

struct DegreeBound {
  // Realized maximum total degree of the ordered product entries.
  int B = 0;
  // max over chains of summed entry degrees.
  int chain_bound = 0;
  // Least L at which the realized maximum is attained.
  std::size_t L_prime = 1;
};

namespace detail {

inline int max_total_degree(const HeisElement<MultiPolynomial>& h) {
  int d = h.c.total_degree();
  for (const auto& p : h.a) d = std::max(d, p.total_degree());
  for (const auto& p : h.b) d = std::max(d, p.total_degree());
  return d;
}

inline int max_total_degree(const PolyMatrix& m) {
  int d = kNegInfinity;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) d = std::max(d, m[i][j].total_degree());
  }
  return d;
}

template <class Seq>
DegreeBound degree_bound(const Seq& g, std::size_t longest_chain) {
  DegreeBound out;
  const UniTriPolySeq u = [&] {
    if constexpr (std::is_same_v<Seq, HeisPolySeq>) {
      return to_unitriangular(g);
    } else {
      return g;
    }
  }();
  out.chain_bound = std::max(0, chain_bound(u));
  int best = 0;
  std::size_t best_l = 1;
  // A product term uses at most one factor per chain step, so L beyond the
  // longest chain cannot raise the total degree.
  for (std::size_t L = 1; L <= std::max<std::size_t>(1, longest_chain); ++L) {
    const int d = max_total_degree(ordered_product(g, L));
    if (d > best) {
      best = d;
      best_l = L;
    }
  }
  out.B = best;
  out.L_prime = best_l;
  return out;
}

}  // namespace detail

inline DegreeBound degree_bound_B(const HeisPolySeq& g) { return detail::degree_bound(g, 2); }

inline DegreeBound degree_bound_B(const UniTriPolySeq& g) {
  return detail::degree_bound(g, g.n() > 1 ? g.n() - 1 : 1);
}

// Default probe bound for degree(): a left or right difference lowers
// max(deg a, deg b, deg c, deg a + deg b) by at least one.
inline std::int64_t sound_probe_bound(const HeisPolySeq& g) {
  return std::max(1, detail::chain_bound(to_unitriangular(g)));
}

inline int degree(const HeisPolySeq& g) { return degree(GroupSequence::from(g), sound_probe_bound(g)); }

namespace detail {

// e_0, ..., e_k in L variables.
inline std::vector<MultiPolynomial> elementary_symmetric(std::size_t L, std::size_t k) {
  std::vector<MultiPolynomial> e(k + 1, MultiPolynomial(L));
  e[0] = MultiPolynomial::constant(L, 1);
  for (std::size_t i = 0; i < L; ++i) {
    const MultiPolynomial xi = MultiPolynomial::variable(L, i);
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * xi;
  }
  return e;
}

// e_1..e_k as polynomials in s_1..s_B via Newton's identities.
inline std::vector<MultiPolynomial> elementary_in_power_sums(std::size_t k, std::size_t B) {
  std::vector<MultiPolynomial> e(k + 1, MultiPolynomial(B));
  e[0] = MultiPolynomial::constant(B, 1);
  for (std::size_t m = 1; m <= k; ++m) {
    MultiPolynomial acc(B);
    for (std::size_t i = 1; i <= m; ++i) {
      MultiPolynomial term = e[m - i] * MultiPolynomial::variable(B, i - 1);
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[m] = acc * Rational(1, static_cast<long>(m));
  }
  return e;
}

}  // namespace detail

/// q in s_1..s_B with q(s_1(x), ..., s_B(x)) = p(x), where s_k is the k-th
/// power sum of the L variables of p. Requires total degree p <= B.
inline MultiPolynomial power_sum_decompose(const MultiPolynomial& p, std::size_t B) {
  const std::size_t L = p.nvars();
  if (!p.is_symmetric()) throw NotSymmetric("polynomial is not symmetric in its variables");
  if (p.is_zero()) return MultiPolynomial(B);
  const int deg = p.total_degree();
  if (deg > static_cast<int>(B)) throw std::invalid_argument("total degree exceeds B");
  const auto k = static_cast<std::size_t>(deg);
  const auto ex = detail::elementary_symmetric(L, std::min(k, L));
  const auto es = detail::elementary_in_power_sums(std::min(k, L), B);

  // Gauss: peel off the lex-leading term c x^e with e_1 >= e_2 >= ... as
  // c e_1^(e1-e2) e_2^(e2-e3) ... e_L^(eL).
  MultiPolynomial rest = p;
  MultiPolynomial out(B);
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().rbegin();
    MultiPolynomial in_x = MultiPolynomial::constant(L, c);
    MultiPolynomial in_s = MultiPolynomial::constant(B, c);
    for (std::size_t i = 0; i < L; ++i) {
      const unsigned power = e[i] - (i + 1 < L ? e[i + 1] : 0U);
      for (unsigned r = 0; r < power; ++r) {
        in_x *= ex.at(i + 1);
        in_s *= es.at(i + 1);
      }
    }
    rest -= in_x;
    out += in_s;
  }
  return out;
}

/// Power sums s_1..s_B of L variables as polynomials.
inline std::vector<MultiPolynomial> power_sums(std::size_t L, std::size_t B) {
  std::vector<MultiPolynomial> out;
  for (std::size_t k = 1; k <= B; ++k) {
    MultiPolynomial s(L);
    for (std::size_t i = 0; i < L; ++i) s += MultiPolynomial::variable(L, i, static_cast<unsigned>(k));
    out.push_back(std::move(s));
  }
  return out;
}

struct AffineMultiplicativeReport {
  bool left_multiplicative = true;
  bool right_multiplicative = true;
  // Smallest i at which l_i != l_1^i or r_i != r_1^i.
  std::optional<std::int64_t> first_failure;
  // (n, m) with n >= 1, m != 0 and g_0^n = l_1^m, if one was found.
  std::optional<std::pair<std::int64_t, std::int64_t>> power_relation;
};

/// Degree-1 test: l = g_0^-1 g and r = g g_0^-1 must be homomorphisms.
inline AffineMultiplicativeReport affine_multiplicative_check(const GroupSequence& g, std::int64_t bound) {
  AffineMultiplicativeReport out;
  const HeisPoint g0 = g.at(0);
  const HeisPoint g0_inv = inv(g0);
  const HeisPoint l1 = mul(g0_inv, g.at(std::min<std::int64_t>(1, bound)));
  const HeisPoint r1 = mul(g.at(std::min<std::int64_t>(1, bound)), g0_inv);
  for (std::int64_t i = 0; i <= bound; ++i) {
    const HeisPoint gi = g.at(i);
    const bool left_ok = mul(g0_inv, gi) == pow(l1, i);
    const bool right_ok = mul(gi, g0_inv) == pow(r1, i);
    out.left_multiplicative = out.left_multiplicative && left_ok;
    out.right_multiplicative = out.right_multiplicative && right_ok;
    if ((!left_ok || !right_ok) && !out.first_failure) out.first_failure = i;
  }
  for (std::int64_t n = 1; n <= bound && !out.power_relation; ++n) {
    const HeisPoint lhs = pow(g0, n);
    for (std::int64_t m = 1; m <= bound; ++m) {
      if (lhs == pow(l1, m)) {
        out.power_relation = std::pair{n, m};
        break;
      }
      if (lhs == pow(l1, -m)) {
        out.power_relation = std::pair{n, -m};
        break;
      }
    }
  }
  return out;
}

/// x -> g(a x + b).
inline HeisPolySeq affine_translate(const HeisPolySeq& g, const Integer& a, const Integer& b) {
  if (a < 1) throw std::invalid_argument("affine translate needs a >= 1");
  const Rational ra(a);
  const Rational rb(b);
  HeisElement<Polynomial> h;
  for (const auto& p : g.a()) h.a.push_back(p.affine(ra, rb));
  for (const auto& p : g.b()) h.b.push_back(p.affine(ra, rb));
  h.c = g.c().affine(ra, rb);
  return HeisPolySeq(h);
}

/// Pointwise product x -> g(x) h(x).
inline HeisPolySeq pointwise_product(const HeisPolySeq& g, const HeisPolySeq& h) {
  return HeisPolySeq(mul(g.element(), h.element()));
}

template <class R>
HeisPoint evaluate(const HeisElement<MultiPolynomial>& h, const std::vector<R>& point) {
  std::vector<Rational> v(point.begin(), point.end());
  HeisPoint out;
  for (const auto& p : h.a) out.a.push_back(p(v));
  for (const auto& p : h.b) out.b.push_back(p(v));
  out.c = h.c(v);
  return out;
}

}  // namespace waring
