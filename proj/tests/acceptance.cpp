// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. All comparisons are exact; the only tolerances
// are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "oracles.hpp"
#include "waring/addsemigroup.hpp"
#include "waring/heisenberg.hpp"
#include "waring/intpoly.hpp"
#include "waring/kamke.hpp"
#include "waring/pipeline.hpp"
#include "waring/polyseq.hpp"
#include "waring/rankcheck.hpp"

using namespace waring;

namespace {

constexpr double kKamkeSeconds = 10.0;
constexpr double kPipelineSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome kamke_reproduction() {
  const KamkeReport r = verify_domain(paper_n2_domain(Rational(1, 24)), 60);
  Outcome o;
  o.pass = r.count > 0 && r.failures.empty() && r.seconds < kKamkeSeconds;
  o.detail = std::to_string(r.count) + " targets, " + std::to_string(r.failures.size()) + " failures, " +
             std::to_string(r.seconds) + " s";
  return o;
}

Outcome symmetrization_suite() {
  std::mt19937_64 rng(kSeed);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 3;
    const std::size_t N = 2 + (i / 3) % 4;
    std::vector<HeisPoint> xs;
    HeisLie sum = HeisLie::zero(n);
    for (std::size_t k = 0; k < N; ++k) {
      xs.push_back(oracle::random_point(rng, n, 25));
      sum = sum + log(xs.back());
    }
    std::vector<HeisPoint> palindrome = xs;
    palindrome.insert(palindrome.end(), xs.rbegin(), xs.rend());
    if (oracle::matrix_product(palindrome) != exp(sum * Rational(2))) ++bad;
  }
  return {bad == 0, "1000 tuples, " + std::to_string(bad) + " mismatches"};
}

Outcome gcd_equivalence() {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<long> start(-100, 100);
  std::size_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    Polynomial f = oracle::random_integer_valued(rng, i % 7, 12);
    if (i % 4 == 0) f *= Rational(1 + i % 5);
    const Integer brute = oracle::gcd_brute(f, 1000);
    bool ok = gcd_values_binomial(f) == brute;
    for (int w = 0; w < 10; ++w) ok = ok && gcd_values_lagrange(f, start(rng)) == brute;
    if (!ok) ++bad;
  }
  return {bad == 0, "500 polynomials, " + std::to_string(bad) + " disagreements"};
}

Outcome frobenius_agreement() {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<long> pick(2, 40);
  std::uniform_int_distribution<int> size(2, 5);
  int sets = 0;
  std::size_t bad = 0;
  while (sets < 50) {
    std::vector<long> gens;
    for (int k = size(rng); k > 0; --k) gens.push_back(pick(rng));
    if (std::accumulate(gens.begin(), gens.end(), 0L, [](long a, long b) { return std::gcd(a, b); }) != 1) continue;
    ++sets;
    const GeneratorSet s(std::vector<std::int64_t>(gens.begin(), gens.end()));
    const std::int64_t f = frobenius_number(s);
    bool ok = f == oracle::frobenius_brute(gens) && !representable(s, f);
    for (std::int64_t t = f + 1; t <= f + 100; ++t) ok = ok && representable(s, t);
    if (!ok) ++bad;
  }
  return {bad == 0, "50 sets, " + std::to_string(bad) + " disagreements"};
}

Outcome vector_counterexample() {
  const std::vector<Polynomial> f{Polynomial({0, 1}), Polynomial({0, 0, 1})};
  std::size_t bad = 0;
  for (std::int64_t m = 1; m <= 12; ++m) {
    if (vector_min_summands(f, {m, m}, m) != static_cast<unsigned>(m)) ++bad;
  }
  return {bad == 0, "m = 1..12, " + std::to_string(bad) + " mismatches"};
}

Outcome degeneracy_dichotomy() {
  const HeisPolySeq g({Polynomial({0, 1})}, {Polynomial({0, 0, 1})}, Polynomial({0, Rational(1, 2), 0, Rational(1, 2)}));
  const auto cert = detect_degenerate(g);
  const bool cert_ok = cert && *cert == DegeneracyCertificate{{Rational(1, 2)}, {0}, 0};
  const auto spec = lemma4deg_search(g, 3, 4);
  bool rank_ok = false;
  std::size_t oracle_rank = 0;
  if (spec) {
    const HeisPolySeq h = translate_product(g, *spec);
    rank_ok = rank(jacobian_of_log(h, 0, jacobian_rows(h))) == 3;
    oracle_rank = oracle::translate_product_rank(g, *spec, 4);
  }
  std::string pairs;
  if (spec) {
    for (const auto& [a, b] : spec->pairs) pairs += "(" + a.get_str() + "," + b.get_str() + ")";
  }
  return {cert_ok && rank_ok && oracle_rank == 3,
          "certificate " + std::string(cert_ok ? "(1/2,0,0)" : "wrong") + ", spec " + pairs + ", oracle rank " +
              std::to_string(oracle_rank)};
}

Outcome pipeline_witnesses() {
  const HeisPolySeq g({Polynomial({0, 1})}, {Polynomial({0, 0, 1})}, Polynomial());
  PipelineOptions opt;
  opt.sample_count = 50;
  const PipelineReport r = run_pipeline(g, opt);
  const CongruenceLattice H(r.n, r.D);
  std::size_t reverified = 0;
  for (const auto& w : r.samples) {
    std::vector<HeisPoint> terms;
    for (const auto& x : w.arguments) terms.push_back(oracle::eval_seq(g, x));
    if (w.verified && w.arguments.size() == r.M && oracle::matrix_product(terms) == w.target &&
        lattice_member(H, w.target)) {
      ++reverified;
    }
  }
  const bool ok = r.samples.size() >= 50 && reverified == r.samples.size() && r.M == 2 * r.L && r.seconds < kPipelineSeconds;
  return {ok, std::to_string(reverified) + "/" + std::to_string(r.samples.size()) + " witnesses, L=" +
                  std::to_string(r.L) + ", M=" + std::to_string(r.M) + ", D=" + r.D.get_str() + ", " +
                  std::to_string(r.seconds) + " s"};
}

Outcome property_suites() {
  std::mt19937_64 rng(kSeed + 3);
  std::size_t bad = 0;
  // Group axioms and log/exp.
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 3;
    const HeisPoint x = oracle::random_point(rng, n, 20);
    const HeisPoint y = oracle::random_point(rng, n, 20);
    const HeisPoint z = oracle::random_point(rng, n, 20);
    const HeisLie u = oracle::random_lie(rng, n, 20);
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) ++bad;
    if (mul(x, inv(x)) != HeisPoint::identity(n) || mul(x, HeisPoint::identity(n)) != x) ++bad;
    if (mul(x, y) != oracle::matrix_product({x, y})) ++bad;
    if (exp(log(x)) != x || log(exp(u)) != u) ++bad;
    if (log(mul(x, y)) != bch(log(x), log(y))) ++bad;
  }
  // Chain-rule scaling.
  for (int i = 0; i < 10; ++i) {
    const HeisPolySeq g = oracle::random_sequence(rng, 1 + i % 2, 1 + i % 3);
    const unsigned B = jacobian_rows(g);
    for (long a = 1; a <= 5; ++a) {
      RationalMatrix diag(B, B);
      for (unsigned k = 1; k <= B; ++k) diag(k - 1, k - 1) = pow(Rational(a), k);
      for (long b = 0; b <= 5; ++b) {
        if (jacobian_of_log(affine_translate(g, a, b), 0, B).entries != diag * jacobian_of_log(g, b, B).entries) ++bad;
      }
    }
  }
  // Power-sum round trip.
  for (int i = 0; i < 6; ++i) {
    const HeisPolySeq g = oracle::random_sequence(rng, 1, 2);
    const auto B = static_cast<std::size_t>(std::max(1, degree_bound_B(g).B));
    for (std::size_t L = 1; L <= 4; ++L) {
      const auto s = symmetrize(g, L);
      if (power_sum_decompose(s.c, B).compose(power_sums(L, B)) != s.c) ++bad;
    }
  }
  // Sumset chain monotonicity.
  std::uniform_int_distribution<std::int64_t> pick(1, 25);
  for (int i = 0; i < 30; ++i) {
    std::set<std::int64_t> a{0};
    for (int k = 0; k < 4; ++k) a.insert(pick(rng));
    for (unsigned k = 1; k < 6; ++k) {
      const auto lo = sumset_iterate(a, k, SumsetWindow{0, 60});
      const auto hi = sumset_iterate(a, k + 1, SumsetWindow{0, 60});
      if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Kamke n=2 reproduction", kamke_reproduction},
      {"BCH/symmetrization suite", symmetrization_suite},
      {"gcd-lemma equivalence", gcd_equivalence},
      {"Frobenius oracle agreement", frobenius_agreement},
      {"vector counterexample (x, x^2)", vector_counterexample},
      {"degeneracy dichotomy and translate search", degeneracy_dichotomy},
      {"end-to-end witnesses for (x, x^2, 0)", pipeline_witnesses},
      {"exact property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
