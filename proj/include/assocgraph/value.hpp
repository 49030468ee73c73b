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


#ifndef ASSOCGRAPH_VALUE_HPP
#define ASSOCGRAPH_VALUE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace assocgraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bare string payload. `top` marks the reserved sentinel that sorts above
/// every string; its canonical encoding is `<TOP>`.
struct Text {
  std::string str;
  bool top = false;
};

/// Finite set of tokens, always sorted ascending and duplicate-free.
class TokenSet {
 public:
  TokenSet() = default;
  explicit TokenSet(std::vector<std::string> tokens);
  TokenSet(std::initializer_list<std::string> tokens)
      : TokenSet(std::vector<std::string>(tokens)) {}

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool contains(std::string_view token) const;
  bool is_subset_of(const TokenSet& other) const;

  TokenSet unite(const TokenSet& other) const;
  TokenSet intersect(const TokenSet& other) const;

  friend bool operator==(const TokenSet&, const TokenSet&) = default;

 private:
  std::vector<std::string> tokens_;
};

/// An element of some algebra's carrier: an exact number, a string, or a
/// token set. Equality is structural and is what every zero test uses.
class Value {
 public:
  enum class Kind { number, text, token_set };

  Value() : payload_(Rational(0)) {}
  Value(Rational r) : payload_(std::move(r)) {}
  Value(long long n) : payload_(Rational(n)) {}
  Value(int n) : payload_(Rational(n)) {}
  Value(Text t) : payload_(std::move(t)) {}
  Value(TokenSet s) : payload_(std::move(s)) {}

  static Value number(const Rational& r) { return Value(r); }
  static Value rational(long long num, long long den);
  static Value text(std::string s) { return Value(Text{std::move(s), false}); }
  static Value top() { return Value(Text{{}, true}); }
  static Value set(std::vector<std::string> tokens) {
    return Value(TokenSet(std::move(tokens)));
  }

  Kind kind() const noexcept { return static_cast<Kind>(payload_.index()); }
  bool is_number() const noexcept { return kind() == Kind::number; }
  bool is_text() const noexcept { return kind() == Kind::text; }
  bool is_token_set() const noexcept { return kind() == Kind::token_set; }
  bool is_integer() const;
  /// -1, 0 or 1 for numbers. Throws std::bad_variant_access otherwise.
  int sign() const;

  const Rational& as_number() const { return std::get<Rational>(payload_); }
  const Text& as_text() const { return std::get<Text>(payload_); }
  const TokenSet& as_token_set() const { return std::get<TokenSet>(payload_); }

  /// Canonical text form: `12`, `-3/4`, `word`, `<TOP>`, `{a,b}`.
  std::string encode() const;

  /// Decoders for each family's canonical syntax. Each throws DomainError on
  /// text that is not in canonical form for that family.
  static Value decode_number(std::string_view s);
  static Value decode_text(std::string_view s);
  static Value decode_token_set(std::string_view s);
  /// Infers the family from the syntax: number, then `{...}`, then `<TOP>`,
  /// then bare text. Used for element names of user-supplied finite tables.
  static Value decode_any(std::string_view s);

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::variant<Rational, Text, TokenSet> payload_;
};

/// Valid set member: non-empty, no whitespace, commas or braces.
bool is_valid_token(std::string_view token);

}  // namespace assocgraph

#endif  // ASSOCGRAPH_VALUE_HPP
