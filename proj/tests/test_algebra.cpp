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
#include "assocgraph/io.hpp"

#include <doctest.h>

#include <random>

using namespace assocgraph;

namespace {

Algebra load(const char* name) {
  return from_finite_spec(
      io::parse_finite_algebra(io::read_file(std::string(ASSOCGRAPH_TEST_DATA) + "/" + name)));
}

}  // namespace

TEST_CASE("plus and times on builtin families") {
  const Algebra nat = make_builtin("natural_arithmetic");
  CHECK(nat.plus(Value(2), Value(3)) == Value(5));

  const Algebra chain = make_builtin("max_min_chain", {{"levels", "4"}});
  CHECK(chain.plus(Value(1), Value(3)) == Value(3));
  CHECK(chain.times(Value(1), Value(3)) == Value(1));

  const Algebra ps = make_builtin("powerset", {{"universe", "x,y"}});
  CHECK(ps.times(Value::set({"x"}), Value::set({"y"})) == ps.zero());
  CHECK(ps.plus(Value::set({"x"}), Value::set({"y"})) == Value::set({"x", "y"}));

  const Algebra ring = make_builtin("integer_ring");
  CHECK(ring.times(Value(-2), Value(3)) == Value(-6));
}

TEST_CASE("non-member operands raise a domain error") {
  const Algebra nat = make_builtin("natural");
  CHECK_THROWS_AS(nat.plus(Value(-1), Value(1)), DomainError);
  CHECK_THROWS_AS(nat.times(Value::rational(1, 2), Value(1)), DomainError);
  const Algebra chain = make_builtin("max-min-chain", {{"levels", "3"}});
  CHECK_THROWS_AS(chain.plus(Value(3), Value(0)), DomainError);
  const Algebra ps = make_builtin("powerset", {{"universe", "x,y"}});
  CHECK_THROWS_AS(ps.plus(Value::set({"z"}), ps.zero()), DomainError);
}

TEST_CASE("is_zero compares with the designated zero") {
  CHECK(make_builtin("natural").is_zero(Value(0)));
  CHECK_FALSE(make_builtin("powerset", {{"universe", "x,y"}}).is_zero(Value::set({"x"})));
  const Algebra mp = make_builtin("max_plus_realzero");
  CHECK(mp.is_zero(Value(0)));
  CHECK(mp.one() == Value(0));
}

TEST_CASE("make_builtin catalog shapes") {
  const Algebra chain = make_builtin("max_min_chain", {{"n", "3"}});
  REQUIRE(chain.is_finite());
  CHECK(chain.carrier() == std::vector<Value>{Value(0), Value(1), Value(2)});
  CHECK(chain.zero() == Value(0));
  CHECK(chain.one() == Value(2));

  const Algebra ps = make_builtin("powerset", {{"universe", "y,x"}});
  REQUIRE(ps.carrier().size() == 4);
  CHECK(ps.zero() == Value(TokenSet{}));
  CHECK(ps.one() == Value::set({"x", "y"}));
  CHECK(ps.name() == "powerset({x,y})");

  const Algebra ring = make_builtin("integer_ring");
  CHECK_FALSE(ring.is_finite());
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const Value v = ring.sample(rng);
    CHECK(v.is_integer());
    CHECK(v.as_number() >= -10);
    CHECK(v.as_number() <= 10);
  }

  const Algebra strings = make_builtin("max_min_strings");
  CHECK(strings.zero() == Value::text(""));
  CHECK(strings.one() == Value::top());
  CHECK(strings.times(Value::text("pear"), Value::top()) == Value::text("pear"));
  CHECK(strings.plus(Value::text("apple"), Value::text("pear")) == Value::text("pear"));
}

TEST_CASE("make_builtin rejects unknown names and bad parameters") {
  CHECK_THROWS_AS(make_builtin("tropical"), ConfigurationError);
  CHECK_THROWS_AS(make_builtin("max_min_chain"), ConfigurationError);
  CHECK_THROWS_AS(make_builtin("max_min_chain", {{"levels", "0"}}), ConfigurationError);
  CHECK_THROWS_AS(make_builtin("max_min_chain", {{"levels", "3x"}}), ConfigurationError);
  CHECK_THROWS_AS(make_builtin("powerset"), ConfigurationError);
  CHECK_THROWS_AS(make_builtin("powerset", {{"universe", "x,x"}}), ConfigurationError);
  CHECK_THROWS_AS(make_builtin("natural", {{"levels", "2"}}), ConfigurationError);
}

TEST_CASE("identity and closure hold exhaustively on finite builtins") {
  for (const Algebra& alg :
       {make_builtin("max_min_chain", {{"levels", "5"}}), make_builtin("boolean_or_and"),
        make_builtin("powerset", {{"universe", "a,b,c"}})}) {
    for (const Value& v : alg.carrier()) {
      CHECK(alg.plus(alg.zero(), v) == v);
      CHECK(alg.plus(v, alg.zero()) == v);
      CHECK(alg.times(alg.one(), v) == v);
      CHECK(alg.times(v, alg.one()) == v);
      for (const Value& w : alg.carrier()) {
        CHECK(alg.contains(alg.plus(v, w)));
        CHECK(alg.contains(alg.times(v, w)));
      }
    }
  }
}

TEST_CASE("identity laws hold on 1000 samples of infinite builtins") {
  for (const char* name : {"natural", "nonneg_rational", "integer_ring", "max_min_strings"}) {
    const Algebra alg = make_builtin(name);
    std::mt19937_64 rng(0);
    for (int i = 0; i < 1000; ++i) {
      const Value v = alg.sample(rng);
      REQUIRE(alg.contains(v));
      CHECK(alg.plus(alg.zero(), v) == v);
      CHECK(alg.plus(v, alg.zero()) == v);
      CHECK(alg.times(alg.one(), v) == v);
      CHECK(alg.times(v, alg.one()) == v);
      CHECK(alg.decode(v.encode()) == v);
    }
  }
}

TEST_CASE("from_finite_spec: boolean table") {
  FiniteAlgebraSpec spec;
  spec.elements = {Value(0), Value(1)};
  spec.zero = 0;
  spec.one = 1;
  spec.plus = {{0, 1}, {1, 1}};
  spec.times = {{0, 0}, {0, 1}};
  const Algebra alg = from_finite_spec(spec);
  CHECK(alg.plus(Value(1), Value(0)) == Value(1));
  CHECK(alg.times(Value(1), Value(0)) == Value(0));
  CHECK(alg.laws().plus_commutative);
  CHECK(alg.laws().times_associative);
  CHECK(alg.decode("1") == Value(1));
  CHECK_THROWS_AS(alg.decode("2"), DomainError);
}

TEST_CASE("from_finite_spec: non-annihilating table keeps v * 0 = v") {
  const Algebra alg = load("nonannihilating_right.txt");
  const Value v = Value::text("v");
  CHECK(alg.times(v, alg.zero()) == v);
  CHECK(alg.times(alg.zero(), v) == alg.zero());
}

TEST_CASE("from_finite_spec validation names the offending cell") {
  FiniteAlgebraSpec spec;
  spec.elements = {Value(0), Value(1)};
  spec.plus = {{0, 1}, {1}};
  spec.times = {{0, 0}, {0, 1}};
  CHECK_THROWS_WITH_AS(from_finite_spec(spec), doctest::Contains("plus row 1"),
                       ValidationError);

  spec.plus = {{0, 1}, {1, 5}};
  CHECK_THROWS_WITH_AS(from_finite_spec(spec), doctest::Contains("plus[1][1]"),
                       ValidationError);

  spec.plus = {{0, 1}, {1, 1}};
  spec.elements = {Value(0), Value(0)};
  CHECK_THROWS_WITH_AS(from_finite_spec(spec), doctest::Contains("duplicate"),
                       ValidationError);

  spec.elements = {Value(0), Value(1)};
  spec.one = 2;
  CHECK_THROWS_AS(from_finite_spec(spec), ValidationError);
}

TEST_CASE("law flags on finite tables are computed") {
  const Algebra alg = load("noncomm_plus.txt");
  CHECK(alg.laws().plus_associative);
  CHECK_FALSE(alg.laws().plus_commutative);
  CHECK(alg.laws().times_commutative);
}
