#pragma once

// JSON encodings used by the command-line tool. Needs nlohmann/json.
//
//   polynomial   ["0", "1/2", "1"]            ascending coefficients
//   point        {"n": 1, "a": ["1"], "b": ["2"], "c": "3"}
//   sequence     {"n": 1, "a": [["0","1"]], "b": [["0","0","1"]], "c": ["0"]}

#include <string>
#include <vector>

#include "json.hpp"
#include "waring/addsemigroup.hpp"
#include "waring/heisenberg.hpp"
#include "waring/kamke.hpp"
#include "waring/pipeline.hpp"
#include "waring/polynomial.hpp"
#include "waring/polyseq.hpp"
#include "waring/rankcheck.hpp"
#include "waring/rational.hpp"

namespace waring::io {

using json = nlohmann::json;

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as string or integer, got " + j.dump());
}

inline std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

inline json to_json(const Rational& q) { return q.get_str(); }
inline json to_json(const Integer& z) { return z.get_str(); }

template <class T>
json to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

inline Polynomial polynomial_from_json(const json& j) { return Polynomial(rationals_from_json(j)); }

inline json to_json(const Polynomial& p) { return to_json(p.coeffs()); }

inline HeisPoint point_from_json(const json& j) {
  HeisPoint p{rationals_from_json(j.at("a")), rationals_from_json(j.at("b")), rational_from_json(j.at("c"))};
  if (p.a.size() != p.b.size()) throw DimensionMismatch("a and b must have equal length");
  if (j.contains("n") && j.at("n").get<std::size_t>() != p.n()) throw DimensionMismatch("n differs from |a|");
  return p;
}

inline json to_json(const HeisPoint& p) {
  return {{"n", p.n()}, {"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}};
}

inline json to_json(const HeisLie& p) {
  return {{"n", p.n()}, {"a", to_json(p.a)}, {"b", to_json(p.b)}, {"d", to_json(p.d)}};
}

inline HeisPolySeq sequence_from_json(const json& j) {
  std::vector<Polynomial> a;
  std::vector<Polynomial> b;
  for (const auto& e : j.at("a")) a.push_back(polynomial_from_json(e));
  for (const auto& e : j.at("b")) b.push_back(polynomial_from_json(e));
  HeisPolySeq g(std::move(a), std::move(b), polynomial_from_json(j.at("c")));
  if (j.contains("n") && j.at("n").get<std::size_t>() != g.n()) throw DimensionMismatch("n differs from |a|");
  return g;
}

inline json to_json(const HeisPolySeq& g) {
  json a = json::array();
  json b = json::array();
  for (const auto& p : g.a()) a.push_back(to_json(p));
  for (const auto& p : g.b()) b.push_back(to_json(p));
  return {{"n", g.n()}, {"a", a}, {"b", b}, {"c", to_json(g.c())}};
}

inline json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

inline json to_json(const IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

inline json to_json(const DegeneracyCertificate& c) {
  return {{"u", to_json(c.u)}, {"v", to_json(c.v)}, {"w", to_json(c.w)}};
}

inline json to_json(const TranslateProductSpec& s) {
  json pairs = json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back({to_json(a), to_json(b)});
  return {{"m", s.m()}, {"pairs", pairs}};
}

inline json to_json(const JacobianMatrix& j) {
  return {{"n", j.n}, {"B", j.B}, {"x0", to_json(j.x0)}, {"rows", to_json(j.entries)}};
}

inline KamkeDomain domain_from_json(const json& j) {
  std::vector<std::pair<Rational, Rational>> bounds;
  for (const auto& e : j.at("bounds")) bounds.emplace_back(rational_from_json(e.at(0)), rational_from_json(e.at(1)));
  return KamkeDomain(j.at("n").get<unsigned>(), j.at("N").get<unsigned>(), Integer(j.at("A").get<long>()),
                     rational_from_json(j.at("i1")), std::move(bounds));
}

inline json to_json(const KamkeDomain& d) {
  json bounds = json::array();
  for (const auto& [lo, hi] : d.bounds()) bounds.push_back({to_json(lo), to_json(hi)});
  return {{"n", d.n()}, {"N", d.N()}, {"A", to_json(d.A())}, {"i1", to_json(d.i1())}, {"bounds", bounds}};
}

inline json to_json(const KamkeReport& r) {
  json failures = json::array();
  for (const auto& t : r.failures) failures.push_back(to_json(t.s));
  return {{"count", r.count}, {"failures", failures}, {"seconds", r.seconds}};
}

inline json to_json(const CoverageResult& r) {
  json out = {{"covered", r.kind == CoverageResult::Kind::kCovered}, {"reason", r.reason}, {"window_hi", r.window_hi}};
  if (r.n) out["N"] = *r.n;
  if (r.kind == CoverageResult::Kind::kCovered) out["window_elements"] = r.window_elements;
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

inline json to_json(const HypothesisReport& r) {
  json offending = json::array();
  for (const auto& v : r.offending) offending.push_back(to_json(v));
  return {{"passed", r.passed}, {"rank", r.rank}, {"degree", r.degree}, {"message", r.message}, {"offending", offending}};
}

inline json to_json(const PipelineReport& r) {
  json samples = json::array();
  for (const auto& w : r.samples) {
    samples.push_back({{"target", to_json(w.target)},
                       {"s", to_json(w.s)},
                       {"x", to_json(w.x)},
                       {"arguments", to_json(w.arguments)},
                       {"verified", w.verified}});
  }
  json out = {{"mode", r.mode},
              {"n", r.n},
              {"B", r.B},
              {"L_prime", r.L_prime},
              {"L_dprime", r.L_dprime},
              {"L", r.L},
              {"A", to_json(r.A)},
              {"A_eff", to_json(r.A_eff)},
              {"m", r.m},
              {"M", r.M},
              {"D", to_json(r.D)},
              {"delta_p_linear", to_json(r.linear)},
              {"delta_p_constant", to_json(r.constant)},
              {"candidates", r.candidates},
              {"unsolved", r.unsolved},
              {"all_verified", r.all_verified()},
              {"seconds", r.seconds},
              {"samples", samples}};
  out["degenerate"] = r.degenerate ? to_json(*r.degenerate) : json(nullptr);
  out["translate_spec"] = r.translate_spec ? to_json(*r.translate_spec) : json(nullptr);
  return out;
}

}  // namespace waring::io
