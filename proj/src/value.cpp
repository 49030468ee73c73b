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


#include "assocgraph/value.hpp"

#include "assocgraph/errors.hpp"

#include <algorithm>
#include <iterator>

namespace assocgraph {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// -?(0|[1-9][0-9]*)
bool is_canonical_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') {
    s.remove_prefix(1);
    if (s == "0") return false;
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), is_digit)) return false;
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

TokenSet::TokenSet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  std::sort(tokens_.begin(), tokens_.end());
  tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
}

bool TokenSet::contains(std::string_view token) const {
  return std::binary_search(tokens_.begin(), tokens_.end(), token);
}

bool TokenSet::is_subset_of(const TokenSet& other) const {
  return std::includes(other.tokens_.begin(), other.tokens_.end(),
                       tokens_.begin(), tokens_.end());
}

TokenSet TokenSet::unite(const TokenSet& other) const {
  TokenSet out;
  std::set_union(tokens_.begin(), tokens_.end(), other.tokens_.begin(),
                 other.tokens_.end(), std::back_inserter(out.tokens_));
  return out;
}

TokenSet TokenSet::intersect(const TokenSet& other) const {
  TokenSet out;
  std::set_intersection(tokens_.begin(), tokens_.end(), other.tokens_.begin(),
                        other.tokens_.end(), std::back_inserter(out.tokens_));
  return out;
}

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == ',' || c == '{' || c == '}' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r';
  });
}

Value Value::rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Value(Rational(num, den));
}

bool Value::is_integer() const {
  return is_number() && as_number().backend().data().denominator() == 1;
}

int Value::sign() const { return as_number().backend().data().numerator().sign(); }

std::string Value::encode() const {
  switch (kind()) {
    case Kind::number: {
      const Rational& r = as_number();
      if (denominator(r) == 1) return numerator(r).str();
      return numerator(r).str() + "/" + denominator(r).str();
    }
    case Kind::text:
      return as_text().top ? std::string("<TOP>") : as_text().str;
    case Kind::token_set: {
      std::string out = "{";
      const auto& toks = as_token_set().tokens();
      for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) out += ',';
        out += toks[i];
      }
      return out + "}";
    }
  }
  return {};
}

Value Value::decode_number(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_canonical_integer(s, true))
      throw DomainError("not a canonical integer: '" + std::string(s) + "'");
    return Value(Rational(Integer(std::string(s))));
  }
  const auto num = s.substr(0, slash);
  const auto den = s.substr(slash + 1);
  if (!is_canonical_integer(num, true) || !is_canonical_integer(den, false) ||
      den == "0" || den == "1")
    throw DomainError("not a canonical rational: '" + std::string(s) + "'");
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (gcd(n, d) != 1)
    throw DomainError("rational not in lowest terms: '" + std::string(s) + "'");
  return Value(Rational(n, d));
}

Value Value::decode_text(std::string_view s) {
  if (s == "<TOP>") return top();
  if (s.find_first_of("\t\n") != std::string_view::npos)
    throw DomainError("text value contains tab or newline");
  return text(std::string(s));
}

Value Value::decode_token_set(std::string_view s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw DomainError("token set must be written {a,b,...}: '" +
                      std::string(s) + "'");
  std::string_view body = s.substr(1, s.size() - 2);
  std::vector<std::string> tokens;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto tok = body.substr(0, comma);
    if (!is_valid_token(tok))
      throw DomainError("invalid token in set: '" + std::string(s) + "'");
    if (!tokens.empty() && !(tokens.back() < tok))
      throw DomainError("set members must be strictly ascending: '" +
                        std::string(s) + "'");
    tokens.emplace_back(tok);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty())
      throw DomainError("trailing comma in set: '" + std::string(s) + "'");
  }
  return Value(TokenSet(std::move(tokens)));
}

Value Value::decode_any(std::string_view s) {
  const bool numeric =
      !s.empty() && (is_digit(s.front()) || (s.front() == '-' && s.size() > 1 &&
                                             is_digit(s[1])));
  if (numeric) return decode_number(s);
  if (!s.empty() && s.front() == '{') return decode_token_set(s);
  return decode_text(s);
}

bool operator==(const Value& a, const Value& b) {
  if (a.payload_.index() != b.payload_.index()) return false;
  switch (a.kind()) {
    case Value::Kind::number:
      return a.as_number() == b.as_number();
    case Value::Kind::text:
      return a.as_text().top == b.as_text().top &&
             a.as_text().str == b.as_text().str;
    case Value::Kind::token_set:
      return a.as_token_set() == b.as_token_set();
  }
  return false;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.payload_.index() <=> b.payload_.index(); c != 0) return c;
  switch (a.kind()) {
    case Value::Kind::number: {
      // Denominators are positive, so cross-multiplying preserves order.
      const Rational& x = a.as_number();
      const Rational& y = b.as_number();
      const auto& xr = x.backend().data();
      const auto& yr = y.backend().data();
      const int c = xr.denominator() == yr.denominator()
                        ? xr.numerator().compare(yr.numerator())
                        : Integer(xr.numerator() * yr.denominator())
                              .compare(Integer(yr.numerator() * xr.denominator()));
      return c < 0 ? std::strong_ordering::less
                   : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Value::Kind::text: {
      const auto& x = a.as_text();
      const auto& y = b.as_text();
      if (x.top != y.top)
        return x.top ? std::strong_ordering::greater : std::strong_ordering::less;
      return x.str <=> y.str;
    }
    case Value::Kind::token_set:
      return a.as_token_set().tokens() <=> b.as_token_set().tokens();
  }
  return std::strong_ordering::equal;
}

}  // namespace assocgraph
