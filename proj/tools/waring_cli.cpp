// Command-line access to the waring library.
//
// Sequences, points and polynomials are JSON (see waring/json_io.hpp) and
// come from --seq/--point/--poly, from --input FILE, or from stdin.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "waring/addsemigroup.hpp"
#include "waring/heisenberg.hpp"
#include "waring/intpoly.hpp"
#include "waring/json_io.hpp"
#include "waring/kamke.hpp"
#include "waring/pipeline.hpp"
#include "waring/polyseq.hpp"
#include "waring/rankcheck.hpp"

namespace {

using waring::Integer;
using waring::Rational;
using json = nlohmann::json;

struct Globals {
  bool as_json = false;
  std::uint64_t seed = 1;
  std::int64_t bound = 0;
  std::string input;
};

json read_json_input(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty()) return json::parse(inline_text);
  if (!path.empty() && path != "-") {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
  }
  return json::parse(std::string(std::istreambuf_iterator<char>(std::cin), {}));
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::int64_t bound_or(const Globals& g, std::int64_t fallback) { return g.bound > 0 ? g.bound : fallback; }

waring::KamkeDomain load_preset(const std::string& name, const std::string& file, const Rational& eps) {
  if (name == "paper-n2" && file.empty()) return waring::paper_n2_domain(eps);
  const std::string path = file.empty() ? WARING_PRESET_FILE : file;
  std::ifstream in(path);
  if (!in) {
    if (name == "paper-n2") return waring::paper_n2_domain(eps);
    throw std::runtime_error("cannot open preset file " + path);
  }
  const json presets = json::parse(in);
  if (!presets.contains(name)) throw std::runtime_error("unknown preset " + name);
  return waring::io::domain_from_json(presets.at(name));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waring-type representation tools for polynomial sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_flag("--json", glob.as_json, "Print machine-readable JSON");
  app.add_option("--seed", glob.seed, "Seed for randomized corpora");
  app.add_option("--bound", glob.bound, "Generic search bound (subcommand specific)");
  app.add_option("--input", glob.input, "JSON input file ('-' for stdin)");

  // gcd
  std::string poly_text;
  std::string start_text = "0";
  auto* gcd = app.add_subcommand("gcd", "gcd of f(N0) for an integer-valued polynomial");
  gcd->add_option("--poly", poly_text, "Ascending coefficients as JSON array");
  gcd->add_option("--start", start_text, "First node of the Lagrange window");

  // frobenius
  std::string gens_text;
  std::vector<std::int64_t> checks;
  auto* frob = app.add_subcommand("frobenius", "Frobenius number of a numerical semigroup");
  frob->add_option("--gens", gens_text, "Comma-separated generators")->required();
  frob->add_option("--check", checks, "Integers to test for representability");

  // sumset
  std::string set_text;
  unsigned sum_k = 2;
  std::int64_t lo = 0;
  std::int64_t hi = 100;
  auto* sumset = app.add_subcommand("sumset", "k-fold sumset of a finite set within a window");
  sumset->add_option("--set", set_text, "Comma-separated elements")->required();
  sumset->add_option("--k", sum_k, "Number of summands");
  sumset->add_option("--lo", lo, "Window lower end");
  sumset->add_option("--hi", hi, "Window upper end");

  // coverage
  auto* coverage = app.add_subcommand("coverage", "Is [f(N0)] a finite union of sumsets of f(N0)?");
  coverage->add_option("--poly", poly_text, "Ascending coefficients as JSON array");

  // heis
  std::string op = "mul";
  std::string x_text;
  std::string y_text;
  long power = 2;
  std::size_t count = 100;
  auto* heis = app.add_subcommand("heis", "Heisenberg group arithmetic");
  heis->add_option("--op", op, "mul|inv|commutator|conjugate|log|exp|bch|pow|symcheck")
      ->check(CLI::IsMember({"mul", "inv", "commutator", "conjugate", "log", "exp", "bch", "pow", "symcheck"}));
  heis->add_option("--x", x_text, "Point {n,a,b,c} (log/bch read d in place of c)");
  heis->add_option("--y", y_text, "Second point");
  heis->add_option("--k", power, "Exponent for pow");
  heis->add_option("--count", count, "Random tuples for symcheck");

  // seq
  std::string seq_text;
  std::string at_text;
  std::size_t product_L = 0;
  bool symmetric = false;
  auto* seq = app.add_subcommand("seq", "Evaluate and analyze a polynomial sequence");
  seq->add_option("--seq", seq_text, "Sequence as JSON");
  seq->add_option("--at", at_text, "Comma-separated arguments to evaluate at");
  seq->add_option("--L", product_L, "Print the ordered product in L variables");
  seq->add_flag("--symmetrize", symmetric, "With --L, print the palindromic product instead");

  // rank
  std::string x0_text = "0";
  unsigned rows = 0;
  auto* rank_cmd = app.add_subcommand("rank", "Derivative matrix of log g and its rank");
  rank_cmd->add_option("--seq", seq_text, "Sequence as JSON");
  rank_cmd->add_option("--x0", x0_text, "Evaluation point");
  rank_cmd->add_option("--rows", rows, "Number of derivative rows (default: degree bound)");

  // degenerate
  unsigned m_max = 3;
  unsigned coeff_bound = 4;
  bool per_pair_b = false;
  auto* degen = app.add_subcommand("degenerate", "Degeneracy certificate and translate-product search");
  degen->add_option("--seq", seq_text, "Sequence as JSON");
  degen->add_option("--m-max", m_max, "Largest number of translate factors");
  degen->add_option("--coeff-bound", coeff_bound, "Largest a_i and b");
  degen->add_flag("--per-pair-b", per_pair_b, "Vary b per factor");

  // kamke-solve
  std::string s_text;
  unsigned summands = 5;
  auto* ksolve = app.add_subcommand("kamke-solve", "Solve s_nu = sum x_k^nu in nonnegative integers");
  ksolve->add_option("--s", s_text, "Comma-separated power sums s_1..s_n")->required();
  ksolve->add_option("--n", summands, "Number of summands N");

  // kamke-verify
  std::string preset = "paper-n2";
  std::string preset_file;
  std::string eps_text = "1/24";
  std::string s1_max_text = "60";
  auto* kverify = app.add_subcommand("kamke-verify", "Solve every target of a Kamke domain up to s1-max");
  kverify->add_option("--preset", preset, "Domain preset name");
  kverify->add_option("--presets", preset_file, "Preset JSON file");
  kverify->add_option("--eps", eps_text, "epsilon for the built-in paper-n2 preset");
  kverify->add_option("--s1-max", s1_max_text, "Largest s_1");

  // pipeline
  std::size_t samples = 50;
  std::string s1_cap_text = "200";
  std::string pipeline_preset;
  bool strict = false;
  auto* pipe = app.add_subcommand("pipeline", "Generate verified product witnesses for a sequence");
  pipe->add_option("--seq", seq_text, "Sequence as JSON");
  pipe->add_option("--samples", samples, "Number of witnesses to emit");
  pipe->add_option("--s1-cap", s1_cap_text, "Largest s_1 to sample");
  pipe->add_option("--preset", pipeline_preset, "Kamke domain preset with n = B");
  pipe->add_option("--presets", preset_file, "Preset JSON file");
  pipe->add_flag("--strict", strict, "Refuse to run without Kamke constants");
  pipe->add_option("--m-max", m_max, "Translate search: largest m");
  pipe->add_option("--coeff-bound", coeff_bound, "Translate search: largest a_i and b");

  // witness
  std::string point_text;
  std::size_t max_terms = 4;
  auto* witness = app.add_subcommand("witness", "Brute-force shortest product g(x_1)...g(x_k) = target");
  witness->add_option("--seq", seq_text, "Sequence as JSON");
  witness->add_option("--target", point_text, "Target point as JSON");
  witness->add_option("--M", max_terms, "Largest number of factors");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream out;
    if (*gcd) {
      const auto f = waring::io::polynomial_from_json(read_json_input(poly_text, glob.input));
      const auto basis = waring::to_binomial_basis(f);
      const Integer a(start_text);
      const auto pair = waring::gcd_is_one_by_pair(f, bound_or(glob, 20));
      const Integer gb = waring::gcd_values_binomial(f);
      const Integer gl = waring::gcd_values_lagrange(f, a);
      json j = {{"binomial_basis", waring::io::to_json(basis.a)},
                {"gcd_binomial", gb.get_str()},
                {"gcd_lagrange", gl.get_str()},
                {"window_start", a.get_str()}};
      j["coprime_pair"] = pair ? json::array({pair->first.get_str(), pair->second.get_str()}) : json(nullptr);
      out << "f = " << f.str() << "\nbinomial basis: " << join(basis.a) << "\ngcd (binomial basis): " << gb
          << "\ngcd (window at " << a << "): " << gl << "\n";
      if (pair) out << "coprime pair: f(" << pair->first << "), f(" << pair->second << ")\n";
      emit(glob, j, out.str());
      return 0;
    }
    if (*frob) {
      const waring::GeneratorSet S(parse_int_list(gens_text));
      const std::int64_t g = waring::frobenius_number(S);
      json j = {{"frobenius", g}};
      out << "Frobenius number: " << g << "\n";
      for (auto t : checks) {
        const bool rep = waring::representable(S, t);
        j["representable"][std::to_string(t)] = rep;
        out << t << (rep ? " is" : " is not") << " representable\n";
      }
      emit(glob, j, out.str());
      return 0;
    }
    if (*sumset) {
      std::set<std::int64_t> a;
      for (auto v : parse_int_list(set_text)) a.insert(v);
      std::optional<std::int64_t> summand_bound;
      if (glob.bound > 0) summand_bound = glob.bound;
      const auto result = waring::sumset_iterate(a, sum_k, {lo, hi}, summand_bound);
      json j = {{"k", sum_k}, {"lo", lo}, {"hi", hi}, {"elements", std::vector<std::int64_t>(result.begin(), result.end())}};
      out << sum_k << "A within [" << lo << ", " << hi << "]: " << result.size() << " elements\n";
      for (auto v : result) out << v << " ";
      out << "\n";
      emit(glob, j, out.str());
      return 0;
    }
    if (*coverage) {
      const auto f = waring::io::polynomial_from_json(read_json_input(poly_text, glob.input));
      const auto r = waring::coverage_bound_search(f, bound_or(glob, 200));
      out << (r.kind == waring::CoverageResult::Kind::kCovered ? "covered" : "not covered") << ": " << r.reason << "\n";
      if (r.n) out << "least N on the window: " << *r.n << "\n";
      if (r.witness) out << "witness: " << *r.witness << "\n";
      emit(glob, waring::io::to_json(r), out.str());
      return 0;
    }
    if (*heis) {
      if (op == "symcheck") {
        std::mt19937_64 rng(glob.seed);
        std::uniform_int_distribution<long> coord(-50, 50);
        std::size_t passed = 0;
        for (std::size_t t = 0; t < count; ++t) {
          const std::size_t n = 1 + rng() % 3;
          const std::size_t N = 2 + rng() % 4;
          std::vector<waring::HeisPoint> xs;
          for (std::size_t i = 0; i < N; ++i) {
            waring::HeisPoint p = waring::HeisPoint::identity(n);
            for (auto& v : p.a) v = coord(rng);
            for (auto& v : p.b) v = coord(rng);
            p.c = coord(rng);
            xs.push_back(p);
          }
          waring::HeisPoint prod = waring::HeisPoint::identity(n);
          for (const auto& p : xs) prod = waring::mul(prod, p);
          for (auto it = xs.rbegin(); it != xs.rend(); ++it) prod = waring::mul(prod, *it);
          waring::HeisLie sum = waring::HeisLie::zero(n);
          for (const auto& p : xs) sum = sum + waring::log(p);
          if (prod == waring::exp(sum * Rational(2))) ++passed;
        }
        out << passed << "/" << count << " palindromic products equal exp(2 sum log X_i)\n";
        emit(glob, {{"checked", count}, {"passed", passed}, {"seed", glob.seed}}, out.str());
        return passed == count ? 0 : 1;
      }
      const json xj = read_json_input(x_text, glob.input);
      auto lie_from = [](const json& j) {
        json k = j;
        if (k.contains("d")) k["c"] = k["d"];
        const auto p = waring::io::point_from_json(k);
        return waring::HeisLie{p.a, p.b, p.c};
      };
      json result;
      if (op == "log") {
        result = waring::io::to_json(waring::log(waring::io::point_from_json(xj)));
      } else if (op == "exp") {
        result = waring::io::to_json(waring::exp(lie_from(xj)));
      } else if (op == "inv") {
        result = waring::io::to_json(waring::inv(waring::io::point_from_json(xj)));
      } else if (op == "pow") {
        result = waring::io::to_json(waring::pow(waring::io::point_from_json(xj), power));
      } else {
        if (y_text.empty()) throw std::invalid_argument("--op " + op + " needs --y");
        const json yj = json::parse(y_text);
        if (op == "bch") {
          result = waring::io::to_json(waring::bch(lie_from(xj), lie_from(yj)));
        } else {
          const auto x = waring::io::point_from_json(xj);
          const auto y = waring::io::point_from_json(yj);
          if (op == "mul") result = waring::io::to_json(waring::mul(x, y));
          if (op == "commutator") result = waring::io::to_json(waring::commutator(x, y));
          if (op == "conjugate") result = waring::io::to_json(waring::conjugate(x, y));
        }
      }
      emit(glob, result, result.dump() + "\n");
      return 0;
    }
    if (*seq) {
      const auto g = waring::io::sequence_from_json(read_json_input(seq_text, glob.input));
      const auto db = waring::degree_bound_B(g);
      json j = {{"sequence", waring::io::to_json(g)},
                {"d", waring::io::to_json(g.d())},
                {"B", db.B},
                {"chain_bound", db.chain_bound},
                {"L_prime", db.L_prime}};
      out << "d(x) = " << g.d().str() << "\nB = " << db.B << " (chain bound " << db.chain_bound << ", L' = " << db.L_prime
          << ")\n";
      const std::int64_t probe = bound_or(glob, waring::sound_probe_bound(g));
      const int deg = waring::degree(waring::GroupSequence::from(g), probe);
      j["degree"] = deg == waring::kNegInfinity ? json("-inf") : json(deg);
      j["probe_bound"] = probe;
      out << "degree = " << (deg == waring::kNegInfinity ? std::string("-inf") : std::to_string(deg))
          << " (shifts and points up to " << probe << ")\n";
      for (const auto& x : parse_integer_list(at_text)) {
        const auto p = waring::evaluate(g, x);
        j["values"].push_back({{"x", x.get_str()}, {"g", waring::io::to_json(p)}});
        out << "g(" << x << ") = " << waring::to_string(p) << "\n";
      }
      if (product_L > 0) {
        const auto h = symmetric ? waring::symmetrize(g, product_L) : waring::ordered_product(g, product_L);
        json entries = json::object();
        for (std::size_t i = 0; i < h.a.size(); ++i) {
          entries["a" + std::to_string(i + 1)] = h.a[i].str();
          entries["b" + std::to_string(i + 1)] = h.b[i].str();
          out << "a" << i + 1 << " = " << h.a[i].str() << "\nb" << i + 1 << " = " << h.b[i].str() << "\n";
        }
        entries["c"] = h.c.str();
        out << "c = " << h.c.str() << "\n";
        j[symmetric ? "symmetrized" : "ordered_product"] = entries;
      }
      emit(glob, j, out.str());
      return 0;
    }
    if (*rank_cmd) {
      const auto g = waring::io::sequence_from_json(read_json_input(seq_text, glob.input));
      const unsigned B = rows > 0 ? rows : waring::jacobian_rows(g);
      const auto jac = waring::jacobian_of_log(g, Integer(x0_text), B);
      const std::size_t r = waring::rank(jac);
      const std::size_t r0 = waring::rank(jac.j0());
      const auto hyp = waring::check_hypotheses(g);
      json j = waring::io::to_json(jac);
      j["rank"] = r;
      j["rank_j0"] = r0;
      j["hypotheses"] = waring::io::to_json(hyp);
      out << "rows (k-th derivatives of a, b, d at " << jac.x0 << "):\n";
      for (std::size_t i = 0; i < jac.entries.rows(); ++i) out << "  " << join(jac.entries.row(i)) << "\n";
      out << "rank = " << r << " of " << 2 * g.n() + 1 << ", rank of a/b block = " << r0 << "\n";
      out << "hypotheses: " << hyp.message << "\n";
      emit(glob, j, out.str());
      return 0;
    }
    if (*degen) {
      const auto g = waring::io::sequence_from_json(read_json_input(seq_text, glob.input));
      const auto cert = waring::detect_degenerate(g);
      json j;
      j["certificate"] = cert ? waring::io::to_json(*cert) : json(nullptr);
      if (cert) {
        out << "degenerate: d = u.a + v.b + w with u = (" << join(cert->u) << "), v = (" << join(cert->v)
            << "), w = " << cert->w << "\n";
        const auto spec = waring::lemma4deg_search(g, {m_max, coeff_bound, per_pair_b});
        j["translate_spec"] = spec ? waring::io::to_json(*spec) : json(nullptr);
        if (spec) {
          out << "rank restored by h(x) =";
          for (const auto& [a, b] : spec->pairs) out << " g(" << a << "x+" << b << ")";
          out << "\n";
        } else {
          out << "no rank-restoring product with m <= " << m_max << " and coefficients <= " << coeff_bound << "\n";
        }
      } else {
        out << "not degenerate: d is independent of a, b and 1\n";
      }
      emit(glob, j, out.str());
      return 0;
    }
    if (*ksolve) {
      const waring::PowerSumTarget t{parse_integer_list(s_text)};
      std::optional<Integer> xb;
      if (glob.bound > 0) xb = Integer(static_cast<long>(glob.bound));
      const auto x = waring::solve_power_sums(t, summands, xb);
      json j = {{"s", waring::io::to_json(t.s)}, {"N", summands}};
      j["x"] = x ? waring::io::to_json(*x) : json(nullptr);
      out << (x ? "x = " + join(*x) : std::string("no solution")) << "\n";
      emit(glob, j, out.str());
      return x ? 0 : 1;
    }
    if (*kverify) {
      const auto D = load_preset(preset, preset_file, waring::parse_rational(eps_text));
      const auto rep = waring::verify_domain(D, Integer(s1_max_text));
      json j = waring::io::to_json(rep);
      j["domain"] = waring::io::to_json(D);
      out << "targets: " << rep.count << ", failures: " << rep.failures.size() << ", seconds: " << rep.seconds << "\n";
      for (const auto& f : rep.failures) out << "  unsolved: (" << join(f.s) << ")\n";
      emit(glob, j, out.str());
      return rep.failures.empty() ? 0 : 1;
    }
    if (*pipe) {
      const auto g = waring::io::sequence_from_json(read_json_input(seq_text, glob.input));
      waring::PipelineOptions opt;
      opt.sample_count = samples;
      opt.s1_cap = glob.bound > 0 ? Integer(static_cast<long>(glob.bound)) : Integer(s1_cap_text);
      opt.strict = strict;
      opt.lemma = {m_max, coeff_bound, false};
      if (!pipeline_preset.empty()) opt.domain = load_preset(pipeline_preset, preset_file, Rational(1, 24));
      const auto hyp = waring::check_hypotheses(g);
      if (!hyp.passed) {
        emit(glob, {{"hypotheses", waring::io::to_json(hyp)}}, "refused: " + hyp.message + "\n");
        return 2;
      }
      const auto r = waring::run_pipeline(g, opt);
      std::size_t verified = 0;
      for (const auto& w : r.samples) verified += w.verified ? 1 : 0;
      out << "mode: " << r.mode
          << (r.mode == "witness-sampling" ? " (no Kamke constants for this B; each sampled s solved individually)" : "")
          << "\nB = " << r.B << ", L = " << r.L << ", A = " << r.A_eff << ", M = " << r.M << ", D = " << r.D << "\n";
      if (r.degenerate) out << "degenerate; working with a product of " << r.m << " affine translates\n";
      out << "witnesses: " << r.samples.size() << " (" << verified << " verified), candidates " << r.candidates
          << ", unsolved " << r.unsolved << "\n";
      for (const auto& w : r.samples) {
        out << "  " << waring::to_string(w.target) << " = prod g(x) over x in (" << join(w.arguments) << ")"
            << (w.verified ? "" : "  FAILED") << "\n";
      }
      emit(glob, waring::io::to_json(r), out.str());
      return r.all_verified() ? 0 : 1;
    }
    if (*witness) {
      const auto g = waring::io::sequence_from_json(read_json_input(seq_text, glob.input));
      const auto target = waring::io::point_from_json(json::parse(point_text));
      const auto w = waring::brute_force_witness(g, target, max_terms, Integer(static_cast<long>(bound_or(glob, 10))));
      json j = {{"target", waring::io::to_json(target)}};
      j["witness"] = w ? waring::io::to_json(*w) : json(nullptr);
      bool ok = true;
      if (w) {
        ok = waring::product_of_terms(g, *w) == target;
        j["verified"] = ok;
        out << "witness (" << join(*w) << ")" << (ok ? "" : " FAILED") << "\n";
      } else {
        out << "no product of at most " << max_terms << " terms\n";
      }
      emit(glob, j, out.str());
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
