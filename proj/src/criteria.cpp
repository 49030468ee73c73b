/*
 *   Copyright 2026 The assocgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "assocgraph/criteria.hpp"

#include "assocgraph/errors.hpp"

#include <random>
#include <sstream>

namespace assocgraph::criteria {

namespace {

std::optional<std::string> identity_failure(const Algebra& alg, const Value& v) {
  if (alg.plus(alg.zero(), v) != v) return "plus-left";
  if (alg.plus(v, alg.zero()) != v) return "plus-right";
  if (alg.times(alg.one(), v) != v) return "times-left";
  if (alg.times(v, alg.one()) != v) return "times-right";
  return std::nullopt;
}

bool is_inverse_pair(const Algebra& alg, const Value& v, const Value& w) {
  return !alg.is_zero(v) && !alg.is_zero(w) && alg.is_zero(alg.plus(v, w));
}

bool is_zero_divisor_pair(const Algebra& alg, const Value& v, const Value& w) {
  return !alg.is_zero(v) && !alg.is_zero(w) && alg.is_zero(alg.times(v, w));
}

std::optional<std::string> annihilator_failure(const Algebra& alg, const Value& v) {
  if (!alg.is_zero(alg.times(v, alg.zero())))
    return alg.is_zero(v) ? "zero" : "right";
  if (!alg.is_zero(alg.times(alg.zero(), v))) return alg.is_zero(v) ? "zero" : "left";
  return std::nullopt;
}

Verdict fail(Mode mode, std::size_t checked, std::vector<Value> witness,
             std::string detail = {}) {
  Verdict v;
  v.pass = false;
  v.mode = mode;
  v.checked = checked;
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

Verdict pass(Mode mode, std::size_t checked) {
  Verdict v;
  v.mode = mode;
  v.checked = checked;
  return v;
}

const std::optional<KnownViolation>* known(const AnalyticFacts& facts, Law law) {
  switch (law) {
    case Law::identity: return &facts.identity;
    case Law::no_additive_inverses: return &facts.no_additive_inverses;
    case Law::zero_product: return &facts.zero_product;
    case Law::annihilator: return &facts.annihilator;
  }
  return nullptr;
}

const char* law_name(Law law) {
  switch (law) {
    case Law::identity: return "identity laws";
    case Law::no_additive_inverses: return "criterion 1";
    case Law::zero_product: return "criterion 2";
    case Law::annihilator: return "criterion 3";
  }
  return "";
}

// Reconciles a sampled verdict with the family's analytic classification.
Verdict reconcile(const Algebra& alg, Law law, Verdict sampled) {
  if (!alg.facts()) return sampled;
  const auto& entry = *known(*alg.facts(), law);
  if (entry) return fail(Mode::analytic, sampled.checked, entry->witness, entry->detail);
  if (!sampled.pass)
    throw InternalConsistencyError(std::string(law_name(law)) + " of " + alg.name() +
                                   " is classified as holding but sampling found " +
                                   sampled.witness.front().encode());
  sampled.analytic_backing = true;
  return sampled;
}

Verdict checked_result(const Algebra& alg, Law law, Verdict v) {
  if (!v.pass && !reproduces(alg, law, v))
    throw InternalConsistencyError(std::string(law_name(law)) + " witness for " +
                                   alg.name() + " does not reproduce");
  return v;
}

template <typename ElementTest>
Verdict scan_elements(const Algebra& alg, Law law, const CheckOptions& opts,
                      ElementTest test) {
  if (alg.is_finite()) {
    const auto& elems = alg.carrier();
    for (const Value& v : elems)
      if (auto detail = test(v)) return fail(Mode::exhaustive, elems.size(), {v}, *detail);
    return pass(Mode::exhaustive, elems.size());
  }
  std::mt19937_64 rng(opts.seed);
  Verdict v = pass(Mode::sampled, opts.samples);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Value x = alg.sample(rng);
    if (auto detail = test(x)) {
      v = fail(Mode::sampled, opts.samples, {x}, *detail);
      break;
    }
  }
  return reconcile(alg, law, std::move(v));
}

template <typename PairTest>
Verdict scan_pairs(const Algebra& alg, Law law, const CheckOptions& opts, PairTest test) {
  if (alg.is_finite()) {
    const auto& elems = alg.carrier();
    for (const Value& a : elems)
      for (const Value& b : elems)
        if (test(a, b)) return fail(Mode::exhaustive, elems.size() * elems.size(), {a, b});
    return pass(Mode::exhaustive, elems.size() * elems.size());
  }
  std::mt19937_64 rng(opts.seed);
  Verdict v = pass(Mode::sampled, opts.samples);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Value a = alg.sample(rng);
    Value b = alg.sample(rng);
    if (test(a, b)) {
      v = fail(Mode::sampled, opts.samples, {a, b});
      break;
    }
  }
  return reconcile(alg, law, std::move(v));
}

}  // namespace

const Verdict& CriteriaReport::verdict(int criterion) const {
  switch (criterion) {
    case 0: return identity;
    case 1: return no_additive_inverses;
    case 2: return zero_product;
    case 3: return annihilator;
  }
  throw PreconditionError("criterion must be 1, 2 or 3");
}

bool reproduces(const Algebra& alg, Law law, const Verdict& v) {
  if (v.pass) return false;
  switch (law) {
    case Law::identity:
      return v.witness.size() == 1 && identity_failure(alg, v.witness[0]).has_value();
    case Law::no_additive_inverses:
      return v.witness.size() == 2 && is_inverse_pair(alg, v.witness[0], v.witness[1]);
    case Law::zero_product:
      return v.witness.size() == 2 && is_zero_divisor_pair(alg, v.witness[0], v.witness[1]);
    case Law::annihilator:
      return v.witness.size() == 1 && annihilator_failure(alg, v.witness[0]).has_value();
  }
  return false;
}

Verdict check_identity_laws(const Algebra& alg, const CheckOptions& opts) {
  return checked_result(alg, Law::identity,
                        scan_elements(alg, Law::identity, opts, [&](const Value& v) {
                          return identity_failure(alg, v);
                        }));
}

Verdict check_no_additive_inverses(const Algebra& alg, const CheckOptions& opts) {
  return checked_result(
      alg, Law::no_additive_inverses,
      scan_pairs(alg, Law::no_additive_inverses, opts,
                 [&](const Value& a, const Value& b) { return is_inverse_pair(alg, a, b); }));
}

Verdict check_zero_product(const Algebra& alg, const CheckOptions& opts) {
  return checked_result(
      alg, Law::zero_product,
      scan_pairs(alg, Law::zero_product, opts, [&](const Value& a, const Value& b) {
        return is_zero_divisor_pair(alg, a, b);
      }));
}

Verdict check_annihilator(const Algebra& alg, const CheckOptions& opts) {
  // Nonzero witnesses first; a failure of 0 ⊗ 0 alone is reported last.
  Verdict v = scan_elements(alg, Law::annihilator, opts, [&](const Value& x) {
    return alg.is_zero(x) ? std::nullopt : annihilator_failure(alg, x);
  });
  if (v.pass) {
    if (auto detail = annihilator_failure(alg, alg.zero()))
      v = fail(v.mode, v.checked, {alg.zero()}, *detail);
  }
  return checked_result(alg, Law::annihilator, std::move(v));
}

CriteriaReport validate(const Algebra& alg, const CheckOptions& opts) {
  CriteriaReport report{alg,
                        check_identity_laws(alg, opts),
                        check_no_additive_inverses(alg, opts),
                        check_zero_product(alg, opts),
                        check_annihilator(alg, opts),
                        false};
  report.certified = true;
  for (const Verdict* v : {&report.identity, &report.no_additive_inverses,
                           &report.zero_product, &report.annihilator})
    report.certified = report.certified && v->pass && v->definitive();
  return report;
}

std::optional<ZeroSkipLicense> LicenseIssuer::issue(const CriteriaReport& report) {
  if (!report.certified) return std::nullopt;
  return ZeroSkipLicense(report.algebra);
}

std::optional<ZeroSkipLicense> zero_skip_license(const CriteriaReport& report) {
  return LicenseIssuer::issue(report);
}

// Witness graphs

namespace {

graph::EdgeRecord edge(std::string key, std::string src, Value out, std::string dst,
                       Value in) {
  graph::EdgeRecord e;
  e.key = std::move(key);
  e.sources.emplace(std::move(src), std::move(out));
  e.targets.emplace(std::move(dst), std::move(in));
  return e;
}

}  // namespace

WitnessCase witness_additive_inverse(const Algebra& alg, const Value& v, const Value& w) {
  if (!is_inverse_pair(alg, v, w))
    throw PreconditionError("(" + v.encode() + ", " + w.encode() +
                            ") is not a pair of nonzero additive inverses in " +
                            alg.name());
  if (alg.is_zero(alg.one()))
    throw PreconditionError("witness needs target weight one, which is zero in " +
                            alg.name());
  WitnessCase wc;
  wc.criterion = 1;
  wc.graph.edges.push_back(edge("k1", "a", v, "b", alg.one()));
  wc.graph.edges.push_back(edge("k2", "a", w, "b", alg.one()));
  wc.expected_oracle = {{"a", "b"}};
  wc.description = "parallel edges k1, k2 from a to b with source weights " +
                   v.encode() + " and " + w.encode() + " that sum to zero";
  return wc;
}

WitnessCase witness_zero_product(const Algebra& alg, const Value& v, const Value& w) {
  if (!is_zero_divisor_pair(alg, v, w))
    throw PreconditionError("(" + v.encode() + ", " + w.encode() +
                            ") is not a pair of nonzero zero divisors in " + alg.name());
  WitnessCase wc;
  wc.criterion = 2;
  wc.graph.edges.push_back(edge("k", "a", v, "a", w));
  wc.expected_oracle = {{"a", "a"}};
  wc.description = "self-loop k at a with weights " + v.encode() + " and " +
                   w.encode() + " whose product is zero";
  return wc;
}

WitnessCase witness_annihilator(const Algebra& alg, const Value& v) {
  const auto side = annihilator_failure(alg, v);
  if (!side)
    throw PreconditionError(v.encode() + " is annihilated by zero on both sides in " +
                            alg.name());
  const Value weight = alg.is_zero(v) ? alg.one() : v;
  if (alg.is_zero(weight))
    throw PreconditionError("witness needs a nonzero loop weight in " + alg.name());
  WitnessCase wc;
  wc.criterion = 3;
  wc.graph.edges.push_back(edge("k", "a", weight, "a", weight));
  wc.graph.isolated_vertices = {"b"};
  wc.expected_oracle = {{"a", "a"}};
  if (*side == "zero")
    wc.description = "self-loop k at a with weight " + weight.encode() +
                     " and isolated vertex b; 0 ⊗ 0 is nonzero";
  else
    wc.description = "self-loop k at a with weight " + v.encode() +
                     " and isolated vertex b; " +
                     (*side == "right" ? "v ⊗ 0" : "0 ⊗ v") + " is nonzero";
  return wc;
}

WitnessCase witness_from_report(const CriteriaReport& report, int criterion) {
  const Verdict& v = report.verdict(criterion);
  if (criterion < 1 || criterion > 3 || v.pass)
    throw PreconditionError("no witness exists from checker output: criterion " +
                            std::to_string(criterion) + " passes for " +
                            report.algebra.name());
  switch (criterion) {
    case 1: return witness_additive_inverse(report.algebra, v.witness[0], v.witness[1]);
    case 2: return witness_zero_product(report.algebra, v.witness[0], v.witness[1]);
    default: return witness_annihilator(report.algebra, v.witness[0]);
  }
}

Demonstration demonstrate(const WitnessCase& wc, const Algebra& alg) {
  const graph::IncidencePair p = graph::incidence_arrays(wc.graph, alg);
  Demonstration d;
  d.adjacency = graph::adjacency(p, alg);
  d.oracle = graph::adjacency_oracle(p);
  const Support computed = support(d.adjacency);
  for (const Coordinate& c : d.oracle)
    if (!computed.count(c))
      d.mismatches.push_back({MismatchEntry::Kind::missing, c,
                              get(d.adjacency, c.first, c.second, alg)});
  for (const Coordinate& c : computed)
    if (!d.oracle.count(c))
      d.mismatches.push_back({MismatchEntry::Kind::spurious, c,
                              get(d.adjacency, c.first, c.second, alg)});
  if (d.mismatches.empty())
    throw InternalConsistencyError("witness for criterion " +
                                   std::to_string(wc.criterion) + " over " + alg.name() +
                                   " produced a correct adjacency array");
  return d;
}

// Report rendering

namespace {

std::string join_values(const std::vector<Value>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].encode();
  }
  return out;
}

std::string describe(const Verdict& v, bool pairs) {
  std::ostringstream out;
  if (v.pass) {
    out << "pass (" << (v.mode == Mode::exhaustive ? "exhaustive" : "sampled") << ", "
        << v.checked << (pairs ? " pairs" : " elements");
    if (v.analytic_backing) out << "; holds analytically";
    out << ")";
  } else {
    out << "FAIL witness " << join_values(v.witness, ' ');
    if (!v.detail.empty()) out << " [" << v.detail << "]";
    if (v.mode == Mode::analytic) out << " (analytic)";
  }
  return out.str();
}

std::string machine_line(const char* label, const Verdict& v) {
  std::string out = std::string(label) + '\t';
  if (v.pass) {
    out += "pass\t";
    out += v.mode == Mode::exhaustive ? "exhaustive" : "sampled";
    out += '\t' + std::to_string(v.checked);
    if (v.analytic_backing) out += "\tanalytic";
    return out;
  }
  out += "fail\t" + join_values(v.witness, '\t');
  if (!v.detail.empty()) out += '\t' + v.detail;
  return out;
}

}  // namespace

std::string to_text(const CriteriaReport& r) {
  std::ostringstream out;
  out << "algebra: " << r.algebra.name() << '\n'
      << "identity laws: " << describe(r.identity, false) << '\n'
      << "criterion 1 (no additive inverses): " << describe(r.no_additive_inverses, true)
      << '\n'
      << "criterion 2 (zero product): " << describe(r.zero_product, true) << '\n'
      << "criterion 3 (zero annihilates): " << describe(r.annihilator, false) << '\n'
      << "certified: " << (r.certified ? "yes" : "no") << '\n';
  return out.str();
}

std::vector<std::string> to_machine_lines(const CriteriaReport& r) {
  return {machine_line("identity", r.identity),
          machine_line("crit1", r.no_additive_inverses),
          machine_line("crit2", r.zero_product), machine_line("crit3", r.annihilator),
          std::string("certified\t") + (r.certified ? "yes" : "no")};
}

}  // namespace assocgraph::criteria
