#pragma once

// Kamke domains U(n, N) and the simultaneous power-sum solver
//   s_nu = x_1^nu + ... + x_N^nu,  nu = 1..n,  x_k >= 0.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

/// The region A | s_nu, s_1 > i_1 and i_nu s_1^nu < s_nu < J_nu s_1^nu.
class KamkeDomain {
 public:
  KamkeDomain(unsigned n, unsigned N, Integer A, Rational i1, std::vector<std::pair<Rational, Rational>> bounds)
      : n_(n), N_(N), A_(std::move(A)), i1_(std::move(i1)), bounds_(std::move(bounds)) {
    if (n_ < 1 || N_ < 1) throw std::invalid_argument("Kamke domain needs n >= 1 and N >= 1");
    if (A_ < 1) throw std::invalid_argument("Kamke modulus A must be positive");
    if (i1_ <= 0) throw std::invalid_argument("i1 must be positive");
    if (bounds_.size() + 1 != n_) throw DimensionMismatch("need one (i, J) pair for each nu = 2..n");
    for (const auto& [lo, hi] : bounds_) {
      if (!(lo > 0 && lo < hi)) throw std::invalid_argument("Kamke bounds need 0 < i_nu < J_nu");
    }
  }

  unsigned n() const { return n_; }
  unsigned N() const { return N_; }
  const Integer& A() const { return A_; }
  const Rational& i1() const { return i1_; }
  const std::vector<std::pair<Rational, Rational>>& bounds() const { return bounds_; }

 private:
  unsigned n_;
  unsigned N_;
  Integer A_;
  Rational i1_;
  std::vector<std::pair<Rational, Rational>> bounds_;
};

struct PowerSumTarget {
  std::vector<Integer> s;

  friend auto operator<=>(const PowerSumTarget&, const PowerSumTarget&) = default;
};

inline bool contains(const KamkeDomain& D, const PowerSumTarget& t) {
  if (t.s.size() != D.n()) throw DimensionMismatch("target length differs from domain n");
  for (const auto& s : t.s) {
    if (s % D.A() != 0) return false;
  }
  const Rational s1(t.s[0]);
  if (!(s1 > D.i1())) return false;
  for (unsigned nu = 2; nu <= D.n(); ++nu) {
    const Rational scale = pow(s1, nu);
    const auto& [lo, hi] = D.bounds()[nu - 2];
    const Rational s(t.s[nu - 1]);
    if (!(lo * scale < s && s < hi * scale)) return false;
  }
  return true;
}

/// N = 5, A = 2, i1 = 7, i2 = 1/4, J2 = 1/3 - eps with 0 < eps < 1/12.
inline KamkeDomain paper_n2_domain(const Rational& eps = Rational(1, 24)) {
  if (!(eps > 0 && eps < Rational(1, 12))) throw std::invalid_argument("eps must lie in (0, 1/12)");
  return KamkeDomain(2, 5, 2, 7, {{Rational(1, 4), Rational(1, 3) - eps}});
}

namespace detail {

// Largest x >= 0 with x^e <= v.
inline std::int64_t iroot_floor(std::int64_t v, unsigned e) {
  if (v <= 0) return 0;
  if (e == 1) return v;
  Integer r;
  mpz_root(r.get_mpz_t(), Integer(static_cast<long>(v)).get_mpz_t(), e);
  return r.get_si();
}

class PowerSumSearch {
 public:
  PowerSumSearch(std::vector<std::int64_t> s, unsigned N) : rem_(std::move(s)), N_(N), x_(N, 0) {}

  bool run(std::int64_t cap) { return step(0, cap); }
  const std::vector<std::int64_t>& solution() const { return x_; }

 private:
  // All conditions a remainder must meet to be a sum of r values in [0, cap].
  bool feasible(unsigned r, std::int64_t cap) const {
    const auto n = static_cast<unsigned>(rem_.size());
    for (unsigned nu = 1; nu <= n; ++nu) {
      const std::int64_t R = rem_[nu - 1];
      if (R < 0) return false;
      if ((R - rem_[0]) % 2 != 0) return false;
      if (nu >= 2 && R < rem_[nu - 2]) return false;
      if (r == 0) {
        if (R != 0) return false;
        continue;
      }
      Integer upper = Integer(static_cast<long>(r)) * pow(Integer(static_cast<long>(cap)), nu);
      if (Integer(static_cast<long>(R)) > upper) return false;
      // Power mean: R_1^nu <= r^(nu-1) R_nu.
      if (nu >= 2 && pow(Integer(static_cast<long>(rem_[0])), nu) >
                         pow(Integer(static_cast<long>(r)), nu - 1) * Integer(static_cast<long>(R))) {
        return false;
      }
    }
    return true;
  }

  bool step(unsigned k, std::int64_t cap) {
    const unsigned r = N_ - k;
    if (!feasible(r, cap)) return false;
    if (r == 0) return true;
    const auto n = static_cast<unsigned>(rem_.size());
    // The largest remaining value must reach the average of every power.
    std::int64_t hi = std::min(cap, rem_[0]);
    hi = std::min(hi, iroot_floor(rem_[n - 1], n));
    const std::int64_t lo = (rem_[0] + r - 1) / r;
    for (std::int64_t x = hi; x >= lo; --x) {
      std::int64_t p = 1;
      for (unsigned nu = 1; nu <= n; ++nu) {
        p *= x;
        rem_[nu - 1] -= p;
      }
      x_[k] = x;
      const bool ok = step(k + 1, x);
      p = 1;
      for (unsigned nu = 1; nu <= n; ++nu) {
        p *= x;
        rem_[nu - 1] += p;
      }
      if (ok) return true;
    }
    return false;
  }

  std::vector<std::int64_t> rem_;
  unsigned N_;
  std::vector<std::int64_t> x_;
};

}  // namespace detail

/// N nonnegative integers, sorted descending, whose first n power sums
/// are t.s; empty when none exist below x_bound (default s_1).
inline std::optional<std::vector<Integer>> solve_power_sums(const PowerSumTarget& t, unsigned N,
                                                            std::optional<Integer> x_bound = std::nullopt) {
  if (t.s.empty()) throw std::invalid_argument("power-sum target needs n >= 1");
  std::vector<std::int64_t> s;
  for (const auto& v : t.s) {
    if (v < 0) return std::nullopt;
    s.push_back(to_int64(v));
  }
  const std::int64_t cap = x_bound ? std::min(to_int64(*x_bound), s[0]) : s[0];
  if (cap < 0) return std::nullopt;
  detail::PowerSumSearch search(std::move(s), N);
  if (!search.run(cap)) return std::nullopt;
  std::vector<Integer> out;
  for (auto x : search.solution()) out.emplace_back(static_cast<long>(x));
  return out;
}

inline std::vector<Integer> power_sums_of(const std::vector<Integer>& x, unsigned n) {
  std::vector<Integer> s(n, Integer(0));
  for (const auto& v : x) {
    Integer p = 1;
    for (unsigned nu = 0; nu < n; ++nu) {
      p *= v;
      s[nu] += p;
    }
  }
  return s;
}

struct KamkeReport {
  std::size_t count = 0;
  std::vector<PowerSumTarget> failures;
  double seconds = 0;
};

namespace detail {

template <class Visit>
void enumerate_domain(const KamkeDomain& D, const Integer& s1_max, Visit&& visit) {
  const Integer& A = D.A();
  // Smallest multiple of A strictly above i1.
  Integer s1 = floor(D.i1()) + 1;
  if (s1 % A != 0) s1 += A - s1 % A;
  PowerSumTarget t;
  t.s.resize(D.n());
  for (; s1 <= s1_max; s1 += A) {
    t.s[0] = s1;
    auto fill = [&](auto&& self, unsigned nu) -> void {
      if (nu > D.n()) {
        visit(t);
        return;
      }
      const Rational scale = pow(Rational(s1), nu);
      const auto& [lo, hi] = D.bounds()[nu - 2];
      // Multiples of A strictly inside (lo * scale, hi * scale).
      Integer first = floor(lo * scale) + 1;
      if (first % A != 0) first += A - first % A;
      for (Integer v = first; Rational(v) < hi * scale; v += A) {
        t.s[nu - 1] = v;
        self(self, nu + 1);
      }
    };
    fill(fill, 2);
  }
}

}  // namespace detail

/// Runs the solver on every target of D with s_1 <= s1_max.
inline KamkeReport verify_domain(const KamkeDomain& D, const Integer& s1_max) {
  const auto start = std::chrono::steady_clock::now();
  KamkeReport report;
  detail::enumerate_domain(D, s1_max, [&](const PowerSumTarget& t) {
    ++report.count;
    const auto x = solve_power_sums(t, D.N());
    if (!x || power_sums_of(*x, D.n()) != t.s) report.failures.push_back(t);
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace waring
