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


#ifndef ASSOCGRAPH_ALGEBRA_HPP
#define ASSOCGRAPH_ALGEBRA_HPP

#include "assocgraph/value.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace assocgraph {

/// Declared algebraic laws. These are user claims, never proofs; the array
/// layer reads them only to decide whether a product may run in parallel.
struct LawFlags {
  bool plus_associative = false;
  bool plus_commutative = false;
  bool times_associative = false;
  bool times_commutative = false;
};

/// A known failure of one law, with carrier values that reproduce it.
struct KnownViolation {
  std::vector<Value> witness;
  std::string detail;  // e.g. "plus-right" or "right"
};

/// Hand-verified classification for an infinite builtin family. An empty
/// optional means the law holds on the whole carrier.
struct AnalyticFacts {
  std::optional<KnownViolation> identity;
  std::optional<KnownViolation> no_additive_inverses;
  std::optional<KnownViolation> zero_product;
  std::optional<KnownViolation> annihilator;
};

/// Concrete encoding of a finite value set with its two operation tables.
/// Table cells hold indices into `elements`.
struct FiniteAlgebraSpec {
  std::vector<Value> elements;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<std::vector<std::size_t>> plus;
  std::vector<std::vector<std::size_t>> times;
};

/// A value set with two closed binary operations and designated identities.
///
/// Carriers are either finite, with an enumeration, or an infinite family
/// described by a membership predicate and a sampler. Instances are
/// immutable and cheap to copy; copies share state.
class Algebra {
 public:
  using BinaryOp = std::function<Value(const Value&, const Value&)>;
  using Membership = std::function<bool(const Value&)>;
  using Sampler = std::function<Value(std::mt19937_64&)>;
  using Decoder = std::function<Value(std::string_view)>;
  using Enumerator = std::function<std::vector<Value>()>;

  struct Definition {
    std::string name;
    Value zero;
    Value one;
    BinaryOp plus;
    BinaryOp times;
    Membership contains;
    Decoder decode;
    /// Set for finite carriers. Called at most once, lazily.
    Enumerator enumerate;
    /// Required for infinite carriers; finite carriers sample uniformly.
    Sampler sample;
    LawFlags laws;
    std::optional<AnalyticFacts> facts;
  };

  explicit Algebra(Definition def);

  const std::string& name() const noexcept;
  const Value& zero() const noexcept;
  const Value& one() const noexcept;
  const LawFlags& laws() const noexcept;
  const std::optional<AnalyticFacts>& facts() const noexcept;

  /// a ⊕ b. Throws DomainError when an operand is outside the carrier.
  Value plus(const Value& a, const Value& b) const;
  /// a ⊗ b. Throws DomainError when an operand is outside the carrier.
  Value times(const Value& a, const Value& b) const;

  bool is_zero(const Value& v) const { return v == zero(); }
  bool contains(const Value& v) const;

  bool is_finite() const noexcept;
  /// Full carrier enumeration. Throws PreconditionError for infinite carriers.
  const std::vector<Value>& carrier() const;
  Value sample(std::mt19937_64& rng) const;

  /// Parses a canonical encoding and checks membership (DomainError).
  Value decode(std::string_view text) const;
  std::string encode(const Value& v) const { return v.encode(); }

  /// True when both handles refer to the same constructed algebra.
  bool same_as(const Algebra& other) const noexcept {
    return state_ == other.state_;
  }

 private:
  struct State;
  std::shared_ptr<const State> state_;
};

using BuiltinParams = std::map<std::string, std::string, std::less<>>;

/// Builds one of the catalog algebras by name. Accepts the underscore names
/// (`max_min_chain`) and the dashed CLI aliases (`max-min-chain`, `natural`).
/// Parameters: `levels` for max_min_chain, `universe` (comma list) for
/// powerset. Throws ConfigurationError on unknown names or bad parameters.
Algebra make_builtin(std::string_view name, const BuiltinParams& params = {});

/// True when `name` resolves to a builtin family.
bool is_builtin_name(std::string_view name);

/// Table-driven algebra. Throws ValidationError naming the offending cell.
Algebra from_finite_spec(const FiniteAlgebraSpec& spec);

}  // namespace assocgraph

#endif  // ASSOCGRAPH_ALGEBRA_HPP
