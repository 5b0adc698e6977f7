#pragma once

// Additive semigroups generated by finite sets and by polynomial values:
// Frobenius numbers, windowed k-fold sumsets, the finite-cover
// classification for a single integer-valued polynomial, and minimal
// summand counts for vector-valued polynomials.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/intpoly.hpp"
#include "waring/polynomial.hpp"

namespace waring {

/// Finite generating set; stored sorted and without duplicates.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("generator set must be nonempty");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  const std::vector<std::int64_t>& values() const { return gens_; }
  std::int64_t min() const { return gens_.front(); }
  std::int64_t max() const { return gens_.back(); }

  std::int64_t gcd() const {
    std::int64_t g = 0;
    for (auto v : gens_) g = std::gcd(g, v);
    return g;
  }

 private:
  std::vector<std::int64_t> gens_;
};

/// Closed integer window [lo, hi].
struct SumsetWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

using VectorZ = std::vector<std::int64_t>;

/// Componentwise box lo <= v <= hi for vector sumsets.
struct BoxWindow {
  VectorZ lo;
  VectorZ hi;

  bool contains(const VectorZ& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < lo[i] || v[i] > hi[i]) return false;
    }
    return true;
  }
};

namespace detail {

// Shortest-path table over residues mod the smallest generator: entry r is
// the least representable number congruent to r, or -1 if none.
inline std::vector<std::int64_t> residue_table(const GeneratorSet& s) {
  const std::int64_t modulus = s.min();
  if (modulus <= 0) throw std::invalid_argument("generators must be positive");
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(modulus), kInf);
  dist[0] = 0;
  using Entry = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (auto g : s.values()) {
      const std::int64_t nd = d + g;
      const std::int64_t nr = (r + g) % modulus;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  for (auto& d : dist) {
    if (d == kInf) d = -1;
  }
  return dist;
}

}  // namespace detail

/// Largest integer that is not an N0-combination of the generators; -1
/// when every nonnegative integer is representable (1 is a generator).
inline std::int64_t frobenius_number(const GeneratorSet& s) {
  if (s.min() <= 0) throw std::invalid_argument("generators must be positive");
  if (s.gcd() != 1) throw GcdNotOne("gcd of generators is " + std::to_string(s.gcd()));
  const auto table = detail::residue_table(s);
  return *std::max_element(table.begin(), table.end()) - s.min();
}

// t is a sum of generators with N0 multiplicities; the empty sum gives 0.
inline bool representable(const GeneratorSet& s, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("representable expects t >= 0");
  const auto table = detail::residue_table(s);
  const std::int64_t least = table[static_cast<std::size_t>(t % s.min())];
  return least >= 0 && least <= t;
}

/// k-fold sumset kA intersected with the window. Summands are drawn from A
/// and partial sums are pruned against window.hi, which is only sound when
/// every element of A is nonnegative. Mixed-sign sets need an explicit
/// bound on summand magnitude from the caller; partial sums are then kept
/// within k * summand_bound.
inline std::set<std::int64_t> sumset_iterate(const std::set<std::int64_t>& a, unsigned k,
                                             const SumsetWindow& window,
                                             std::optional<std::int64_t> summand_bound = {}) {
  if (k == 0) throw std::invalid_argument("sumset_iterate expects k >= 1");
  if (a.empty()) return {};
  const bool nonnegative = *a.begin() >= 0;
  if (!nonnegative && !summand_bound) {
    throw UnsupportedPruning(
        "set has negative elements; supply an explicit summand bound for windowed sumsets");
  }
  std::vector<std::int64_t> summands;
  for (auto v : a) {
    if (nonnegative ? v <= window.hi : (v >= -*summand_bound && v <= *summand_bound)) {
      summands.push_back(v);
    }
  }
  std::set<std::int64_t> level(summands.begin(), summands.end());
  for (unsigned step = 1; step < k; ++step) {
    std::set<std::int64_t> next;
    for (auto partial : level) {
      for (auto v : summands) {
        const std::int64_t sum = partial + v;
        if (nonnegative && sum > window.hi) break;
        next.insert(sum);
      }
    }
    level = std::move(next);
  }
  std::set<std::int64_t> out;
  for (auto v : level) {
    if (window.contains(v)) out.insert(v);
  }
  return out;
}

/// Vector sumset kA within a box. Pruning against the box upper corner is
/// applied only when all generators are componentwise nonnegative.
inline std::set<VectorZ> sumset_iterate(const std::set<VectorZ>& a, unsigned k, const BoxWindow& box) {
  if (k == 0) throw std::invalid_argument("sumset_iterate expects k >= 1");
  bool nonnegative = true;
  for (const auto& v : a) {
    for (auto c : v) nonnegative = nonnegative && c >= 0;
  }
  if (!nonnegative) {
    throw UnsupportedPruning("vector generators with negative components cannot be box-pruned");
  }
  auto fits = [&](const VectorZ& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] > box.hi[i]) return false;
    }
    return true;
  };
  std::set<VectorZ> summands;
  for (const auto& v : a) {
    if (fits(v)) summands.insert(v);
  }
  std::set<VectorZ> level = summands;
  for (unsigned step = 1; step < k; ++step) {
    std::set<VectorZ> next;
    for (const auto& partial : level) {
      for (const auto& v : summands) {
        VectorZ sum(partial.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = partial[i] + v[i];
        if (fits(sum)) next.insert(std::move(sum));
      }
    }
    level = std::move(next);
  }
  std::set<VectorZ> out;
  for (const auto& v : level) {
    if (box.contains(v)) out.insert(v);
  }
  return out;
}

/// Result of classifying whether [f(N0)] is a finite union of sumsets.
struct CoverageResult {
  enum class Kind { kCovered, kNotCovered };

  Kind kind = Kind::kCovered;
  // Windowed empirical minimum of N for covered polynomials.
  std::optional<unsigned> n;
  // Covered case: number of semigroup elements inside the window.
  std::size_t window_elements = 0;
  // Not-covered case: an element w such that w*N escapes every finite
  // union of sumsets (the constant itself, or the negative minimum).
  std::optional<Integer> witness;
  std::string reason;
  std::int64_t window_hi = 0;
};

namespace detail {

// An integer bound beyond which f has no real roots (Cauchy bound).
inline Integer cauchy_root_bound(const Polynomial& f) {
  Rational m = 0;
  const Rational lead = f.leading_coeff();
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = abs(f.coeff(k) / lead);
    if (r > m) m = r;
  }
  return ceil(m) + 1;
}

// Values f(x) for x in N0 with 0 <= f(x) <= hi; f must be nonconstant with
// positive leading coefficient.
inline std::vector<std::int64_t> values_in_window(const Polynomial& f, std::int64_t hi) {
  Polynomial shifted = f - Polynomial::constant(Rational(hi));
  const Integer bound = cauchy_root_bound(shifted);
  std::set<std::int64_t> out;
  for (Integer x = 0; x <= bound; ++x) {
    Rational v = f(Rational(x));
    if (v >= 0 && v <= hi) out.insert(to_int64(v.get_num()));
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

/// Classifies f: [f(N0)] is covered by finitely many sumsets iff f = 0, or
/// deg f >= 1 and f keeps one sign on N0. For covered polynomials the
/// least N is measured on the window [0, window_hi] (or [-window_hi, 0]).
inline CoverageResult coverage_bound_search(const Polynomial& f, std::int64_t window_hi) {
  if (!is_integer_valued(f)) throw NotIntegerValued(f.str());
  CoverageResult out;
  out.window_hi = window_hi;
  if (f.is_zero()) {
    out.kind = CoverageResult::Kind::kCovered;
    out.n = 1;
    out.window_elements = 1;
    out.reason = "zero polynomial: [f] = f = {0}";
    return out;
  }
  if (f.degree() == 0) {
    out.kind = CoverageResult::Kind::kNotCovered;
    out.witness = f.coeff(0).get_num();
    out.reason = "nonzero constant c: (N+1)*c lies outside the union of kf(N0) for k <= N";
    return out;
  }
  // Orient so the leading coefficient is positive; then the sign question
  // reduces to the minimum over [0, root bound].
  const bool flipped = f.leading_coeff() < 0;
  const Polynomial g = flipped ? -f : f;
  const Integer bound = detail::cauchy_root_bound(g);
  Integer minimum = g(Rational(0)).get_num();
  for (Integer x = 1; x <= bound; ++x) {
    Integer v = g(Rational(x)).get_num();
    if (v < minimum) minimum = v;
  }
  if (minimum < 0) {
    out.kind = CoverageResult::Kind::kNotCovered;
    out.witness = flipped ? Integer(-minimum) : minimum;
    out.reason = "f changes sign on N0: multiples of the extreme value of opposite sign escape";
    return out;
  }

  const auto values = detail::values_in_window(g, window_hi);
  constexpr unsigned kUnreached = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> best(static_cast<std::size_t>(window_hi) + 1, kUnreached);
  // Semigroup (k >= 1 summands): seed with single values, then relax.
  for (auto v : values) best[v] = 1;
  for (std::int64_t t = 0; t <= window_hi; ++t) {
    if (best[t] == kUnreached) continue;
    for (auto v : values) {
      const std::int64_t u = t + v;
      if (u > window_hi) break;
      if (best[t] + 1 < best[u]) best[u] = best[t] + 1;
    }
  }
  unsigned n = 1;
  std::size_t count = 0;
  for (auto b : best) {
    if (b == kUnreached) continue;
    ++count;
    n = std::max(n, b);
  }
  out.kind = CoverageResult::Kind::kCovered;
  out.n = n;
  out.window_elements = count;
  out.reason = flipped ? "f(N0) in -N0; N measured on [-window_hi, 0]"
                       : "f(N0) in N0; N measured on [0, window_hi]";
  return out;
}

/// Least k with target in k*f(N0), using arguments 0..x_bound; empty when
/// no representation exists within the bounds. Requires componentwise
/// nonnegative values and target so that partial sums can be pruned.
inline std::optional<unsigned> vector_min_summands(const std::vector<Polynomial>& f,
                                                   const VectorZ& target, std::int64_t x_bound) {
  if (f.size() != target.size()) throw DimensionMismatch("target length differs from f");
  for (const auto& fi : f) {
    if (!is_integer_valued(fi)) throw NotIntegerValued(fi.str());
  }
  std::set<VectorZ> values;
  for (std::int64_t x = 0; x <= x_bound; ++x) {
    VectorZ v;
    for (const auto& fi : f) v.push_back(to_int64(fi(Rational(x)).get_num()));
    values.insert(std::move(v));
  }
  for (const auto& v : values) {
    for (auto c : v) {
      if (c < 0) throw UnsupportedPruning("vector values must be componentwise nonnegative");
    }
  }
  for (auto c : target) {
    if (c < 0) return std::nullopt;
  }
  auto fits = [&](const VectorZ& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] > target[i]) return false;
    }
    return true;
  };
  std::vector<VectorZ> summands;
  for (const auto& v : values) {
    if (fits(v)) summands.push_back(v);
  }
  // Every summand is nonnegative, so levels either grow monotonically (0 is
  // a value) or their coordinate sums strictly increase; both terminate.
  std::set<VectorZ> level(summands.begin(), summands.end());
  std::set<VectorZ> previous;
  for (unsigned k = 1;; ++k) {
    if (level.contains(target)) return k;
    if (level.empty() || level == previous) return std::nullopt;
    previous = level;
    std::set<VectorZ> next;
    for (const auto& partial : level) {
      for (const auto& v : summands) {
        VectorZ sum(partial.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = partial[i] + v[i];
        if (fits(sum)) next.insert(std::move(sum));
      }
    }
    level = std::move(next);
  }
}

}  // namespace waring
