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

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <utility>

namespace assocgraph {

namespace {

constexpr std::size_t kMaxPowersetUniverse = 20;

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"natural", "natural_arithmetic"},
      {"natural_arithmetic", "natural_arithmetic"},
      {"nonneg_rational", "nonneg_rational_arithmetic"},
      {"nonneg_rational_arithmetic", "nonneg_rational_arithmetic"},
      {"integer_ring", "integer_ring"},
      {"max_min_chain", "max_min_chain"},
      {"max_min_strings", "max_min_strings"},
      {"powerset", "powerset"},
      {"boolean", "boolean_or_and"},
      {"boolean_or_and", "boolean_or_and"},
      {"max_plus_realzero", "max_plus_realzero"},
  };
  return table;
}

std::string canonical_name(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  const auto it = aliases().find(key);
  return it == aliases().end() ? std::string() : it->second;
}

void expect_params(std::string_view family, const BuiltinParams& params,
                   std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigurationError(std::string(family) + ": unexpected parameter '" +
                               key + "'");
  }
}

const std::string& require_param(std::string_view family, const BuiltinParams& params,
                                 std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw ConfigurationError(std::string(family) + ": missing parameter '" +
                             std::string(key) + "'");
  return it->second;
}

bool is_nonneg(const Value& v) { return v.is_number() && v.sign() >= 0; }

// Integer operands skip the gcd normalization of general rationals.
Value add(const Value& a, const Value& b) {
  if (a.is_integer() && b.is_integer())
    return Value(Rational(Integer(a.as_number().backend().data().numerator() +
                                  b.as_number().backend().data().numerator())));
  return Value(a.as_number() + b.as_number());
}

Value multiply(const Value& a, const Value& b) {
  if (a.is_integer() && b.is_integer())
    return Value(Rational(Integer(a.as_number().backend().data().numerator() *
                                  b.as_number().backend().data().numerator())));
  return Value(a.as_number() * b.as_number());
}

Value random_int(std::mt19937_64& rng, int lo, int hi) {
  return Value(std::uniform_int_distribution<int>(lo, hi)(rng));
}

const LawFlags kAllLaws{true, true, true, true};
const AnalyticFacts kAllHold{};

Algebra natural_arithmetic() {
  Algebra::Definition d;
  d.name = "natural_arithmetic";
  d.zero = Value(0);
  d.one = Value(1);
  d.plus = add;
  d.times = multiply;
  d.contains = [](const Value& v) { return v.is_integer() && v.sign() >= 0; };
  d.decode = Value::decode_number;
  d.sample = [](std::mt19937_64& rng) { return random_int(rng, 0, 10); };
  d.laws = kAllLaws;
  d.facts = kAllHold;
  return Algebra(std::move(d));
}

Algebra nonneg_rational_arithmetic() {
  Algebra::Definition d;
  d.name = "nonneg_rational_arithmetic";
  d.zero = Value(0);
  d.one = Value(1);
  d.plus = add;
  d.times = multiply;
  d.contains = is_nonneg;
  d.decode = Value::decode_number;
  d.sample = [](std::mt19937_64& rng) {
    const int num = std::uniform_int_distribution<int>(0, 10)(rng);
    const int den = std::uniform_int_distribution<int>(1, 6)(rng);
    return Value(Rational(num, den));
  };
  d.laws = kAllLaws;
  d.facts = kAllHold;
  return Algebra(std::move(d));
}

Algebra integer_ring() {
  Algebra::Definition d;
  d.name = "integer_ring";
  d.zero = Value(0);
  d.one = Value(1);
  d.plus = add;
  d.times = multiply;
  d.contains = [](const Value& v) { return v.is_integer(); };
  d.decode = Value::decode_number;
  d.sample = [](std::mt19937_64& rng) { return random_int(rng, -10, 10); };
  d.laws = kAllLaws;
  AnalyticFacts facts;
  facts.no_additive_inverses = KnownViolation{{Value(1), Value(-1)}, ""};
  d.facts = facts;
  return Algebra(std::move(d));
}

Algebra max_min_chain(const BuiltinParams& params) {
  expect_params("max_min_chain", params, {"levels", "n"});
  std::string text;
  if (params.count("levels")) {
    text = params.find("levels")->second;
  } else {
    text = require_param("max_min_chain", params, "n");
  }
  int levels = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), levels);
  if (ec != std::errc() || ptr != text.data() + text.size() || levels < 1)
    throw ConfigurationError("max_min_chain: levels must be a positive integer, got '" +
                             text + "'");
  Algebra::Definition d;
  d.name = "max_min_chain(" + std::to_string(levels) + ")";
  d.zero = Value(0);
  d.one = Value(levels - 1);
  d.plus = [](const Value& a, const Value& b) { return std::max(a, b); };
  d.times = [](const Value& a, const Value& b) { return std::min(a, b); };
  d.contains = [levels](const Value& v) {
    return v.is_integer() && v.sign() >= 0 && v < Value(levels);
  };
  d.decode = Value::decode_number;
  d.enumerate = [levels] {
    std::vector<Value> out;
    for (int i = 0; i < levels; ++i) out.emplace_back(i);
    return out;
  };
  d.laws = kAllLaws;
  return Algebra(std::move(d));
}

Algebra max_min_strings() {
  Algebra::Definition d;
  d.name = "max_min_strings";
  d.zero = Value::text("");
  d.one = Value::top();
  d.plus = [](const Value& a, const Value& b) { return std::max(a, b); };
  d.times = [](const Value& a, const Value& b) { return std::min(a, b); };
  d.contains = [](const Value& v) {
    if (!v.is_text()) return false;
    const Text& t = v.as_text();
    if (t.top) return t.str.empty();
    return t.str != "<TOP>" && t.str.find_first_of("\t\n") == std::string::npos;
  };
  d.decode = Value::decode_text;
  d.sample = [](std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 7)(rng) == 0) return Value::top();
    static constexpr std::array<char, 4> alphabet{'a', 'b', 'c', 'd'};
    const int len = std::uniform_int_distribution<int>(0, 4)(rng);
    std::string s;
    for (int i = 0; i < len; ++i)
      s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    return Value::text(std::move(s));
  };
  d.laws = kAllLaws;
  d.facts = kAllHold;
  return Algebra(std::move(d));
}

std::vector<std::string> split_universe(const std::string& text) {
  std::vector<std::string> tokens;
  if (text.empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    tokens.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return tokens;
}

Algebra powerset(const BuiltinParams& params) {
  expect_params("powerset", params, {"universe"});
  auto tokens = split_universe(require_param("powerset", params, "universe"));
  for (const auto& t : tokens)
    if (!is_valid_token(t))
      throw ConfigurationError("powerset: invalid universe token '" + t + "'");
  if (std::set<std::string>(tokens.begin(), tokens.end()).size() != tokens.size())
    throw ConfigurationError("powerset: duplicate universe token");
  const TokenSet universe(tokens);

  Algebra::Definition d;
  d.name = "powerset(" + Value(universe).encode() + ")";
  d.zero = Value(TokenSet{});
  d.one = Value(universe);
  d.plus = [](const Value& a, const Value& b) {
    return Value(a.as_token_set().unite(b.as_token_set()));
  };
  d.times = [](const Value& a, const Value& b) {
    return Value(a.as_token_set().intersect(b.as_token_set()));
  };
  d.contains = [universe](const Value& v) {
    return v.is_token_set() && v.as_token_set().is_subset_of(universe);
  };
  d.decode = Value::decode_token_set;
  // Subset i holds the universe tokens whose bit is set in i.
  d.enumerate = [universe] {
    const auto& toks = universe.tokens();
    if (toks.size() > kMaxPowersetUniverse)
      throw PreconditionError("powerset: universe of " + std::to_string(toks.size()) +
                              " tokens is too large to enumerate");
    std::vector<Value> out;
    out.reserve(std::size_t{1} << toks.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << toks.size()); ++mask) {
      std::vector<std::string> members;
      for (std::size_t b = 0; b < toks.size(); ++b)
        if (mask & (std::size_t{1} << b)) members.push_back(toks[b]);
      out.emplace_back(TokenSet(std::move(members)));
    }
    return out;
  };
  d.laws = kAllLaws;
  return Algebra(std::move(d));
}

Algebra boolean_or_and() {
  Algebra::Definition d;
  d.name = "boolean_or_and";
  d.zero = Value(0);
  d.one = Value(1);
  d.plus = [](const Value& a, const Value& b) { return std::max(a, b); };
  d.times = [](const Value& a, const Value& b) { return std::min(a, b); };
  d.contains = [](const Value& v) { return v == Value(0) || v == Value(1); };
  d.decode = Value::decode_number;
  d.enumerate = [] { return std::vector<Value>{Value(0), Value(1)}; };
  d.laws = kAllLaws;
  return Algebra(std::move(d));
}

// max-plus with the real number 0 as the null value, so zero and one
// coincide. Reals are modeled by exact rationals.
Algebra max_plus_realzero() {
  Algebra::Definition d;
  d.name = "max_plus_realzero";
  d.zero = Value(0);
  d.one = Value(0);
  d.plus = [](const Value& a, const Value& b) { return std::max(a, b); };
  d.times = add;
  d.contains = [](const Value& v) { return v.is_number(); };
  d.decode = Value::decode_number;
  d.sample = [](std::mt19937_64& rng) { return random_int(rng, -10, 10); };
  d.laws = kAllLaws;
  AnalyticFacts facts;
  facts.identity = KnownViolation{{Value(-1)}, "plus-left"};
  facts.zero_product = KnownViolation{{Value(5), Value(-5)}, ""};
  facts.annihilator = KnownViolation{{Value(5)}, "right"};
  d.facts = facts;
  return Algebra(std::move(d));
}

}  // namespace

bool is_builtin_name(std::string_view name) { return !canonical_name(name).empty(); }

Algebra make_builtin(std::string_view name, const BuiltinParams& params) {
  const std::string family = canonical_name(name);
  if (family.empty())
    throw ConfigurationError("unknown algebra '" + std::string(name) + "'");
  if (family == "max_min_chain") return max_min_chain(params);
  if (family == "powerset") return powerset(params);
  expect_params(family, params, {});
  if (family == "natural_arithmetic") return natural_arithmetic();
  if (family == "nonneg_rational_arithmetic") return nonneg_rational_arithmetic();
  if (family == "integer_ring") return integer_ring();
  if (family == "max_min_strings") return max_min_strings();
  if (family == "boolean_or_and") return boolean_or_and();
  return max_plus_realzero();
}

}  // namespace assocgraph
