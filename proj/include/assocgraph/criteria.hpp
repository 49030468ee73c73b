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


#ifndef ASSOCGRAPH_CRITERIA_HPP
#define ASSOCGRAPH_CRITERIA_HPP

#include "assocgraph/algebra.hpp"
#include "assocgraph/array.hpp"
#include "assocgraph/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace assocgraph::criteria {

enum class Law { identity, no_additive_inverses, zero_product, annihilator };

enum class Mode {
  exhaustive,  // every element or pair of a finite carrier
  sampled,     // pseudo-random draws from an infinite carrier
  analytic,    // failure taken from a hand-verified family classification
};

struct Verdict {
  bool pass = true;
  Mode mode = Mode::exhaustive;
  /// Elements (identity, annihilator) or pairs (criteria 1 and 2) inspected.
  std::size_t checked = 0;
  /// A sampled pass that the family classification confirms for all values.
  bool analytic_backing = false;
  std::vector<Value> witness;
  /// identity: plus-left | plus-right | times-left | times-right
  /// annihilator: right (v⊗0≠0) | left (0⊗v≠0) | zero (0⊗0≠0)
  std::string detail;

  /// A pass that holds for the whole carrier, not just the samples.
  bool definitive() const noexcept {
    return mode == Mode::exhaustive || analytic_backing;
  }
};

struct CheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

struct CriteriaReport {
  Algebra algebra;
  Verdict identity;
  Verdict no_additive_inverses;  // criterion 1
  Verdict zero_product;          // criterion 2
  Verdict annihilator;           // criterion 3
  /// Identity laws and all three criteria pass, each definitively.
  bool certified = false;

  const Verdict& verdict(int criterion) const;
};

Verdict check_identity_laws(const Algebra& alg, const CheckOptions& opts = {});
Verdict check_no_additive_inverses(const Algebra& alg, const CheckOptions& opts = {});
Verdict check_zero_product(const Algebra& alg, const CheckOptions& opts = {});
Verdict check_annihilator(const Algebra& alg, const CheckOptions& opts = {});

CriteriaReport validate(const Algebra& alg, const CheckOptions& opts = {});

/// Re-evaluates a failing verdict's witness through plus and times.
bool reproduces(const Algebra& alg, Law law, const Verdict& v);

struct LicenseIssuer {
  static std::optional<ZeroSkipLicense> issue(const CriteriaReport& report);
};

/// A license for the stored-terms product, granted only to certified algebras.
std::optional<ZeroSkipLicense> zero_skip_license(const CriteriaReport& report);

/// A minimal graph on which a non-compliant algebra misreports adjacency.
struct WitnessCase {
  int criterion = 0;
  graph::Graph graph;
  Support expected_oracle;
  std::string description;
};

/// Two parallel edges a->b with source weights v and w, target weights one.
/// Requires v, w nonzero and v ⊕ w = 0.
WitnessCase witness_additive_inverse(const Algebra& alg, const Value& v, const Value& w);

/// Self-loop at a with source weight v and target weight w. Requires v, w
/// nonzero and v ⊗ w = 0.
WitnessCase witness_zero_product(const Algebra& alg, const Value& v, const Value& w);

/// Self-loop at a with both weights v, plus an isolated vertex b. Requires
/// v ⊗ 0 ≠ 0 or 0 ⊗ v ≠ 0. When v is zero itself (only 0 ⊗ 0 ≠ 0 fails),
/// the loop carries weight one and the stray entry appears at (b, b).
WitnessCase witness_annihilator(const Algebra& alg, const Value& v);

/// Builds the witness for `criterion` from the report's own failure values.
/// Throws PreconditionError when that criterion passed.
WitnessCase witness_from_report(const CriteriaReport& report, int criterion);

struct MismatchEntry {
  enum class Kind { missing, spurious };
  Kind kind;
  Coordinate coord;
  Value value;  // adjacency value at coord
};

struct Demonstration {
  AssociativeArray adjacency;
  Support oracle;
  std::vector<MismatchEntry> mismatches;
};

/// Runs the witness through incidence arrays, full-union adjacency and the
/// oracle. Throws InternalConsistencyError if they agree.
Demonstration demonstrate(const WitnessCase& wc, const Algebra& alg);

std::string to_text(const CriteriaReport& report);
std::vector<std::string> to_machine_lines(const CriteriaReport& report);

}  // namespace assocgraph::criteria

#endif  // ASSOCGRAPH_CRITERIA_HPP
