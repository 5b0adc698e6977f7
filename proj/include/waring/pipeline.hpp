#pragma once

// End-to-end witness generation for a polynomial sequence g in
// H_{2n+1}(Z): targets h in H_{2n+1}(DZ) written as exact products of
// 2L (or 2Lm) terms g(x_i).

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/heisenberg.hpp"
#include "waring/kamke.hpp"
#include "waring/linalg.hpp"
#include "waring/mpoly.hpp"
#include "waring/polyseq.hpp"
#include "waring/rankcheck.hpp"
#include "waring/rational.hpp"

namespace waring {

struct HypothesisReport {
  bool passed = false;
  // Rank of the coefficient matrix of (a, b) over the powers x^1..x^d.
  std::size_t rank = 0;
  int degree = kNegInfinity;
  // Rational relations sum r_j (a, b)_j = const when the rank is short.
  std::vector<std::vector<Rational>> offending;
  std::string message;
};

inline HypothesisReport check_hypotheses(const HeisPolySeq& g) {
  HypothesisReport out;
  const std::size_t n = g.n();
  std::vector<Polynomial> cols = g.a();
  cols.insert(cols.end(), g.b().begin(), g.b().end());
  int d = kNegInfinity;
  for (const auto& p : cols) d = std::max(d, p.degree());
  out.degree = d;
  if (d < 1) {
    out.message = "abelianized sequence (a, b) is constant";
    RationalMatrix none(1, 2 * n);
    out.offending = kernel(none);
    return out;
  }
  RationalMatrix m(static_cast<std::size_t>(d), 2 * n);
  for (int k = 1; k <= d; ++k) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(k - 1, j) = cols[j].coeff(k);
  }
  out.rank = rank(m);
  out.offending = kernel(m);
  if (out.rank != 2 * n) {
    out.message = "coefficient matrix of (a, b) has rank " + std::to_string(out.rank) + " < " +
                  std::to_string(2 * n);
    return out;
  }
  if (d < static_cast<int>(2 * n)) {
    out.message = "max degree " + std::to_string(d) + " of (a, b) is below 2n = " + std::to_string(2 * n);
    return out;
  }
  out.passed = true;
  out.message = "ok";
  return out;
}

struct PipelineOptions {
  std::size_t sample_count = 50;
  // Largest s_1 examined while sampling.
  Integer s1_cap = 200;
  // Kamke constants for n = B; without them the run is in witness-sampling
  // mode and solvability of each sampled s is checked individually.
  std::optional<KamkeDomain> domain;
  // Refuse to run without Kamke constants.
  bool strict = false;
  Lemma4DegOptions lemma;
  // Largest factor tried when scaling L so the constant term lies in the lattice.
  unsigned l_scale_cap = 64;
};

struct WitnessSample {
  HeisPoint target;
  std::vector<Integer> s;
  // Solver output (L values) and the full argument list of length M.
  std::vector<Integer> x;
  std::vector<Integer> arguments;
  bool verified = false;
};

struct PipelineReport {
  std::string mode;
  std::size_t n = 0;
  int B = 0;
  std::size_t L_prime = 0;
  std::size_t L_dprime = 0;
  std::size_t L = 0;
  Integer A = 1;
  Integer A_eff = 1;
  std::optional<DegeneracyCertificate> degenerate;
  std::optional<TranslateProductSpec> translate_spec;
  std::size_t m = 1;
  std::size_t M = 0;
  Integer D = 2;
  // p in s_1..s_B, and delta(p(s)) = linear * s + constant.
  HeisElement<MultiPolynomial> p;
  RationalMatrix linear;
  std::vector<Rational> constant;
  // Columns A_eff * linear span the lattice of delta(p(A_eff Z^B)) - constant.
  IntegerMatrix lattice;
  std::vector<WitnessSample> samples;
  std::size_t candidates = 0;
  std::size_t unsolved = 0;
  double seconds = 0;

  bool all_verified() const {
    return std::all_of(samples.begin(), samples.end(), [](const WitnessSample& w) { return w.verified; });
  }
};

/// Product g(x_1) ... g(x_k).
inline HeisPoint product_of_terms(const HeisPolySeq& g, const std::vector<Integer>& xs) {
  HeisPoint acc = HeisPoint::identity(g.n());
  for (const auto& x : xs) acc = mul(acc, evaluate(g, x));
  return acc;
}

namespace detail {

inline std::vector<Rational> flatten(const HeisPoint& x) {
  std::vector<Rational> out = x.a;
  out.insert(out.end(), x.b.begin(), x.b.end());
  out.push_back(x.c);
  return out;
}

inline std::vector<MultiPolynomial> flatten(const HeisElement<MultiPolynomial>& x) {
  std::vector<MultiPolynomial> out = x.a;
  out.insert(out.end(), x.b.begin(), x.b.end());
  out.push_back(x.c);
  return out;
}

struct AffineMap {
  RationalMatrix linear;
  std::vector<Rational> constant;
};

// p(s) for the symmetrized product in L variables, and delta o p split
// into its linear and constant parts.
inline std::pair<HeisElement<MultiPolynomial>, AffineMap> power_sum_map(const HeisPolySeq& h, std::size_t L,
                                                                        std::size_t B) {
  const HeisElement<MultiPolynomial> sym = symmetrize(h, L);
  HeisElement<MultiPolynomial> p;
  for (const auto& e : sym.a) p.a.push_back(power_sum_decompose(e, B));
  for (const auto& e : sym.b) p.b.push_back(power_sum_decompose(e, B));
  p.c = power_sum_decompose(sym.c, B);
  const std::vector<MultiPolynomial> flat = flatten(delta(p));
  AffineMap map{RationalMatrix(flat.size(), B), std::vector<Rational>(flat.size(), Rational(0))};
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i].total_degree() > 1) throw std::logic_error("delta o p is not affine in the power sums");
    const MultiPolynomial entry = flat[i].widened(B);
    for (const auto& [e, c] : entry.terms()) {
      const auto it = std::find(e.begin(), e.end(), 1U);
      if (it == e.end()) {
        map.constant[i] = c;
      } else {
        map.linear(i, static_cast<std::size_t>(it - e.begin())) = c;
      }
    }
  }
  return {std::move(p), std::move(map)};
}

inline Integer least_multiple_at_least(const Integer& a, const Integer& bound) {
  Integer q = (bound + a - 1) / a;
  if (q < 1) q = 1;
  return q * a;
}

// {z in Z^B : lattice z + constant = 0 mod D} as offset + basis Z^B, with
// basis lower triangular and a positive diagonal.
struct CosetLattice {
  IntegerMatrix basis;
  std::vector<Integer> offset;
};

inline CosetLattice target_coset(const IntegerMatrix& lattice, const std::vector<Integer>& constant, const Integer& D) {
  const std::size_t m = lattice.rows();
  const std::size_t B = lattice.cols();
  IntegerMatrix big(m, B + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < B; ++j) big(i, j) = lattice(i, j);
    big(i, B + i) = D;
  }
  const ColumnEchelon ce = column_echelon(big);
  IntegerMatrix gens(B, B + m - ce.rank());
  for (std::size_t j = ce.rank(); j < B + m; ++j) {
    for (std::size_t i = 0; i < B; ++i) gens(i, j - ce.rank()) = ce.transform(i, j);
  }
  const ColumnEchelon tri = column_echelon(gens);
  if (tri.rank() != B) throw std::logic_error("congruence lattice is not of full rank");
  std::vector<Integer> rhs;
  for (const auto& c : constant) rhs.push_back(-c);
  const auto particular = integer_solve(big, rhs);
  if (!particular) throw std::logic_error("constant term is not reachable modulo D");
  return {tri.echelon.columns(0, B), std::vector<Integer>(particular->begin(), particular->begin() + B)};
}

// Visits s = A z, z in the coset, by s_1 and then lex, restricted to
// vectors that can be power sums of L nonnegative integers. Stops when
// visit returns true.
template <class Visit>
void enumerate_power_sums(const CosetLattice& coset, std::size_t L, const Integer& A, const Integer& s1_lo,
                          const Integer& s1_cap, Visit&& visit) {
  const std::size_t B = coset.offset.size();
  const Integer Lz(static_cast<unsigned long>(L));
  std::vector<Integer> s(B);
  std::vector<Integer> c(B);
  bool stop = false;
  // Least z >= lo with z = base mod step.
  auto first_in_class = [](const Integer& lo, const Integer& base, const Integer& step) {
    Integer r = (base - lo) % step;
    if (r < 0) r += step;
    return Integer(lo + r);
  };
  auto fill = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == B) {
      stop = visit(s);
      return;
    }
    const auto nu = static_cast<unsigned>(k + 1);
    Integer lo;
    Integer hi;
    if (k == 0) {
      lo = s1_lo;
      hi = s1_cap;
    } else {
      // s_nu >= s_1^nu / L^(nu-1), s_nu >= s_{nu-1}, s_nu >= s_{nu-1}^2 / s_{nu-2};
      // s_nu <= s_{nu-1} * max x with max x <= s_{nu-1}^(1/(nu-1)).
      lo = ceil(Rational(pow(s[0], nu), pow(Lz, nu - 1)));
      lo = std::max(lo, s[k - 1]);
      if (k >= 2) lo = std::max(lo, ceil(Rational(s[k - 1] * s[k - 1], s[k - 2])));
      Integer root;
      mpz_root(root.get_mpz_t(), s[k - 1].get_mpz_t(), nu - 1);
      hi = s[k - 1] * root;
    }
    Integer base = coset.offset[k];
    for (std::size_t j = 0; j < k; ++j) base += c[j] * coset.basis(k, j);
    const Integer& step = coset.basis(k, k);
    const Integer z_lo = ceil(Rational(lo, A));
    const Integer z_hi = floor(Rational(hi, A));
    for (Integer z = first_in_class(z_lo, base, step); z <= z_hi && !stop; z += step) {
      s[k] = A * z;
      // Power sums share the parity of s_1.
      if (k > 0 && (s[k] - s[0]) % 2 != 0) continue;
      c[k] = (z - base) / step;
      self(self, k + 1);
    }
  };
  fill(fill, 0);
}

}  // namespace detail

/// Integer z with lattice z = delta(h) - constant; s = A_eff z is then a
/// power-sum vector with delta(p(s)) = delta(h).
inline std::optional<std::vector<Integer>> delta_preimage(const PipelineReport& r, const HeisPoint& h) {
  const std::vector<Rational> target = detail::flatten(delta(h));
  std::vector<Integer> rhs;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Rational v = target[i] - r.constant[i];
    if (!is_integer(v)) return std::nullopt;
    rhs.push_back(v.get_num());
  }
  return integer_solve(r.lattice, rhs);
}

inline PipelineReport run_pipeline(const HeisPolySeq& g, const PipelineOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const HypothesisReport hyp = check_hypotheses(g);
  if (!hyp.passed) throw HypothesesNotMet(hyp.message);

  PipelineReport r;
  r.n = g.n();
  HeisPolySeq h = g;
  r.degenerate = detect_degenerate(g);
  if (r.degenerate) {
    r.translate_spec = lemma4deg_search(g, opt.lemma);
    if (!r.translate_spec) throw DegenerateUnresolved("no rank-restoring translate product within the search bounds");
    h = translate_product(g, *r.translate_spec);
    r.m = r.translate_spec->m();
  }

  const DegreeBound db = degree_bound_B(h);
  r.B = db.B;
  r.L_prime = db.L_prime;
  const auto B = static_cast<std::size_t>(db.B);
  if (opt.domain) {
    if (opt.domain->n() != B) {
      throw std::invalid_argument("Kamke domain has n = " + std::to_string(opt.domain->n()) + " but B = " +
                                  std::to_string(B));
    }
    r.mode = "kamke-domain";
    r.A = opt.domain->A();
    r.L_dprime = opt.domain->N();
  } else {
    if (opt.strict) {
      throw KamkeConstantsMissing("no Kamke constants known for B = " + std::to_string(B));
    }
    r.mode = "witness-sampling";
    r.A = 1;
    r.L_dprime = B;
  }

  // Scale A until A * linear is integral, then pick L.
  const std::size_t base_L = std::max({r.L_prime, r.L_dprime, B});
  const detail::AffineMap map0 = detail::power_sum_map(h, base_L, B).second;
  Integer k = 1;
  for (std::size_t i = 0; i < map0.linear.rows(); ++i) {
    for (std::size_t j = 0; j < map0.linear.cols(); ++j) k = lcm(k, map0.linear(i, j).get_den());
  }
  r.A_eff = r.A * k;
  r.lattice = IntegerMatrix(map0.linear.rows(), B);
  for (std::size_t i = 0; i < map0.linear.rows(); ++i) {
    for (std::size_t j = 0; j < B; ++j) r.lattice(i, j) = Rational(map0.linear(i, j) * r.A_eff).get_num();
  }
  if (rank(r.lattice) != 2 * r.n + 1) throw std::logic_error("delta o p has rank below 2n + 1");

  // The constant term is L * (per-unit constant); scale L into the lattice.
  Integer L = detail::least_multiple_at_least(r.A_eff, Integer(static_cast<unsigned long>(base_L)));
  std::vector<Rational> unit(map0.constant.size());
  for (std::size_t i = 0; i < unit.size(); ++i) unit[i] = map0.constant[i] / Rational(static_cast<unsigned long>(base_L));
  bool placed = false;
  for (unsigned factor = 1; factor <= opt.l_scale_cap && !placed; ++factor) {
    const Integer candidate = L * factor;
    std::vector<Integer> rhs;
    bool integral = true;
    for (const auto& u : unit) {
      const Rational v = u * Rational(candidate);
      integral = integral && is_integer(v);
      rhs.push_back(v.get_num());
    }
    if (integral && integer_solve(r.lattice, rhs)) {
      L = candidate;
      placed = true;
    }
  }
  if (!placed) throw std::logic_error("constant term never enters the lattice within the L scaling cap");
  r.L = to_int64(L);
  r.M = 2 * r.L * r.m;

  auto [p, map] = detail::power_sum_map(h, r.L, B);
  r.p = std::move(p);
  r.linear = std::move(map.linear);
  r.constant = std::move(map.constant);
  r.D = lcm(lattice_exponent(r.lattice), 2);
  const CongruenceLattice H(r.n, r.D);

  std::vector<Integer> constant;
  for (const auto& v : r.constant) constant.push_back(v.get_num());
  const detail::CosetLattice coset = detail::target_coset(r.lattice, constant, r.D);
  std::map<std::string, bool> seen;
  const Integer s1_lo = opt.domain ? Integer(floor(opt.domain->i1()) + 1) : Integer(1);
  detail::enumerate_power_sums(coset, r.L, r.A_eff, s1_lo, opt.s1_cap, [&](const std::vector<Integer>& s) {
    if (opt.domain && !contains(*opt.domain, PowerSumTarget{s})) return false;
    ++r.candidates;
    const HeisPoint target = evaluate(r.p, s);
    if (!is_integral(target) || !lattice_member(H, target)) return false;
    const std::string key = to_string(target);
    if (seen.contains(key)) return false;
    const auto x = solve_power_sums(PowerSumTarget{s}, static_cast<unsigned>(r.L));
    if (!x) {
      ++r.unsolved;
      return false;
    }
    seen.emplace(key, true);
    WitnessSample w;
    w.target = target;
    w.s = s;
    w.x = *x;
    std::vector<Integer> palindrome(x->begin(), x->end());
    palindrome.insert(palindrome.end(), x->rbegin(), x->rend());
    for (const auto& v : palindrome) {
      if (r.translate_spec) {
        for (const auto& [a, b] : r.translate_spec->pairs) w.arguments.push_back(a * v + b);
      } else {
        w.arguments.push_back(v);
      }
    }
    w.verified = w.arguments.size() == r.M && product_of_terms(g, w.arguments) == target;
    r.samples.push_back(std::move(w));
    return r.samples.size() >= opt.sample_count;
  });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Shortest (x_1..x_k), k <= M and 0 <= x_i <= x_bound, with
/// g(x_1)...g(x_k) = target, by meet in the middle.
inline std::optional<std::vector<Integer>> brute_force_witness(const HeisPolySeq& g, const HeisPoint& target,
                                                               std::size_t M, const Integer& x_bound) {
  if (!is_integral(target)) throw NotIntegral("brute-force target must be integral");
  const std::int64_t xb = to_int64(x_bound);
  std::vector<HeisPoint> values;
  for (std::int64_t x = 0; x <= xb; ++x) values.push_back(evaluate(g, Integer(static_cast<long>(x))));

  // All products of exactly len terms, keyed by value (first tuple wins).
  auto products = [&](std::size_t len) {
    std::map<std::string, std::pair<HeisPoint, std::vector<Integer>>> out;
    std::vector<std::int64_t> idx(len, 0);
    while (true) {
      HeisPoint acc = HeisPoint::identity(g.n());
      std::vector<Integer> args;
      for (auto i : idx) {
        acc = mul(acc, values[static_cast<std::size_t>(i)]);
        args.emplace_back(static_cast<long>(i));
      }
      out.try_emplace(to_string(acc), acc, std::move(args));
      std::size_t pos = len;
      while (pos > 0 && idx[pos - 1] == xb) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
    return out;
  };

  for (std::size_t k = 0; k <= M; ++k) {
    const std::size_t left_len = (k + 1) / 2;
    const auto left = products(left_len);
    const auto right = products(k - left_len);
    for (const auto& [key, entry] : right) {
      // left * right = target  <=>  left = target * right^-1.
      const HeisPoint need = mul(target, inv(entry.first));
      const auto it = left.find(to_string(need));
      if (it == left.end()) continue;
      std::vector<Integer> witness = it->second.second;
      witness.insert(witness.end(), entry.second.begin(), entry.second.end());
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace waring
