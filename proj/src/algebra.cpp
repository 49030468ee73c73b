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


#include "assocgraph/algebra.hpp"

#include "assocgraph/errors.hpp"

#include <mutex>
#include <utility>

namespace assocgraph {

struct Algebra::State {
  Definition def;
  mutable std::once_flag carrier_once;
  mutable std::vector<Value> carrier;
};

Algebra::Algebra(Definition def) {
  if (!def.plus || !def.times || !def.contains || !def.decode)
    throw ConfigurationError("algebra '" + def.name +
                             "' is missing an operation, membership test or decoder");
  if (!def.enumerate && !def.sample)
    throw ConfigurationError("algebra '" + def.name +
                             "' needs a carrier enumeration or a sampler");
  if (!def.contains(def.zero) || !def.contains(def.one))
    throw ConfigurationError("algebra '" + def.name +
                             "': zero and one must be carrier members");
  auto state = std::make_shared<State>();
  state->def = std::move(def);
  state_ = std::move(state);
}

const std::string& Algebra::name() const noexcept { return state_->def.name; }
const Value& Algebra::zero() const noexcept { return state_->def.zero; }
const Value& Algebra::one() const noexcept { return state_->def.one; }
const LawFlags& Algebra::laws() const noexcept { return state_->def.laws; }
const std::optional<AnalyticFacts>& Algebra::facts() const noexcept {
  return state_->def.facts;
}

bool Algebra::contains(const Value& v) const { return state_->def.contains(v); }

Value Algebra::plus(const Value& a, const Value& b) const {
  if (!contains(a) || !contains(b))
    throw DomainError("plus: operand outside carrier of " + name() + ": " +
                      (contains(a) ? b : a).encode());
  return state_->def.plus(a, b);
}

Value Algebra::times(const Value& a, const Value& b) const {
  if (!contains(a) || !contains(b))
    throw DomainError("times: operand outside carrier of " + name() + ": " +
                      (contains(a) ? b : a).encode());
  return state_->def.times(a, b);
}

bool Algebra::is_finite() const noexcept {
  return static_cast<bool>(state_->def.enumerate);
}

const std::vector<Value>& Algebra::carrier() const {
  if (!is_finite())
    throw PreconditionError("algebra '" + name() + "' has an infinite carrier");
  std::call_once(state_->carrier_once,
                 [this] { state_->carrier = state_->def.enumerate(); });
  return state_->carrier;
}

Value Algebra::sample(std::mt19937_64& rng) const {
  if (state_->def.sample) return state_->def.sample(rng);
  const auto& elems = carrier();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  return elems[pick(rng)];
}

Value Algebra::decode(std::string_view text) const {
  Value v = state_->def.decode(text);
  if (!contains(v))
    throw DomainError("value '" + std::string(text) + "' is not in the carrier of " +
                      name());
  return v;
}

namespace {

void check_table(const FiniteAlgebraSpec& spec,
                 const std::vector<std::vector<std::size_t>>& table,
                 const char* label) {
  const std::size_t n = spec.elements.size();
  if (table.size() != n)
    throw ValidationError(std::string(label) + " table has " +
                          std::to_string(table.size()) + " rows, expected " +
                          std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw ValidationError(std::string(label) + " row " + std::to_string(i) +
                            " has " + std::to_string(table[i].size()) +
                            " cells, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw ValidationError(std::string(label) + "[" + std::to_string(i) + "][" +
                              std::to_string(j) + "]: index " +
                              std::to_string(table[i][j]) + " out of range");
  }
}

bool table_associative(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

bool table_commutative(const std::vector<std::vector<std::size_t>>& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

struct FiniteTables {
  std::vector<Value> elements;
  std::map<Value, std::size_t> index;
  std::vector<std::vector<std::size_t>> plus;
  std::vector<std::vector<std::size_t>> times;
};

}  // namespace

Algebra from_finite_spec(const FiniteAlgebraSpec& spec) {
  const std::size_t n = spec.elements.size();
  if (n == 0) throw ValidationError("finite algebra needs at least one element");
  auto tables = std::make_shared<FiniteTables>();
  tables->elements = spec.elements;
  for (std::size_t i = 0; i < n; ++i) {
    if (!tables->index.emplace(spec.elements[i], i).second)
      throw ValidationError("duplicate element '" + spec.elements[i].encode() +
                            "' at index " + std::to_string(i));
  }
  if (spec.zero >= n) throw ValidationError("zero index out of range");
  if (spec.one >= n) throw ValidationError("one index out of range");
  check_table(spec, spec.plus, "plus");
  check_table(spec, spec.times, "times");
  tables->plus = spec.plus;
  tables->times = spec.times;

  std::string name = "finite{";
  for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + spec.elements[i].encode();
  name += "}";

  auto lookup = [tables](const std::vector<std::vector<std::size_t>> FiniteTables::*table) {
    return [tables, table](const Value& a, const Value& b) {
      const std::size_t i = tables->index.at(a);
      const std::size_t j = tables->index.at(b);
      return tables->elements[((*tables).*table)[i][j]];
    };
  };

  Algebra::Definition def;
  def.name = std::move(name);
  def.zero = spec.elements[spec.zero];
  def.one = spec.elements[spec.one];
  def.plus = lookup(&FiniteTables::plus);
  def.times = lookup(&FiniteTables::times);
  def.contains = [tables](const Value& v) { return tables->index.count(v) != 0; };
  def.decode = [tables](std::string_view s) {
    for (const auto& e : tables->elements)
      if (e.encode() == s) return e;
    throw DomainError("unknown element '" + std::string(s) + "'");
  };
  def.enumerate = [tables] { return tables->elements; };
  def.laws = {table_associative(spec.plus), table_commutative(spec.plus),
              table_associative(spec.times), table_commutative(spec.times)};
  return Algebra(std::move(def));
}

}  // namespace assocgraph
