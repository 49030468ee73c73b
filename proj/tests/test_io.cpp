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


#include "assocgraph/errors.hpp"
#include "assocgraph/io.hpp"

#include <doctest.h>

#include <functional>

using namespace assocgraph;

namespace {

std::string data(const char* name) {
  return io::read_file(std::string(ASSOCGRAPH_TEST_DATA) + "/" + name);
}

ParseDiagnostic diagnose(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.diagnostic();
  }
  FAIL("expected a ParseError");
  return {};
}

}  // namespace

TEST_CASE("triples") {
  const Algebra nat = make_builtin("natural");
  const auto t = io::parse_triples("# header\n\na\tb\t3\nb\tc\t1\n", nat);
  REQUIRE(t.size() == 2);
  CHECK(t[0].row == "a");
  CHECK(t[0].col == "b");
  CHECK(t[0].value == Value(3));

  auto d = diagnose([&] { io::parse_triples("a\tb\t1\na\tb\n", nat); });
  CHECK(d.role == "triples");
  CHECK(d.line == 2);
  CHECK(d.message == "expected 3 tab-separated fields, found 2");

  d = diagnose([&] { io::parse_triples("a\tb\t-1\n", nat); });
  CHECK(d.line == 1);
  CHECK(d.column == "field 3 (value)");

  d = diagnose([&] { io::parse_triples("a\tb\t2/1\n", make_builtin("nonneg_rational")); });
  CHECK(d.column == "field 3 (value)");

  d = diagnose([&] { io::parse_triples("\tb\t1\n", nat); });
  CHECK(d.column == "field 1 (row)");
  CHECK(d.to_string() == "triples:1: field 1 (row): empty key");
}

TEST_CASE("set-valued triples") {
  const auto t = io::parse_set_triples(data("two_docs.tsv"));
  REQUIRE(t.size() == 4);
  CHECK(t[0].value == Value::set({"apple", "pear"}));
  CHECK(diagnose([] { io::parse_set_triples("d\te\t{b,a}\n"); }).column == "field 3 (value)");
  CHECK(diagnose([] { io::parse_set_triples("d\te\t{a, b}\n"); }).column == "field 3 (value)");
}

TEST_CASE("edge lists") {
  const Algebra nat = make_builtin("natural");
  const graph::Graph g = io::parse_edge_list(data("path.tsv"), nat);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].key == "e1");
  CHECK(g.edges[0].sources.at("a") == Value(1));
  CHECK(g.edges[0].targets.at("b") == Value(1));

  const graph::Graph h = io::parse_edge_list(data("hyper.tsv"), nat);
  REQUIRE(h.edges.size() == 1);
  CHECK(h.edges[0].sources.size() == 2);
  CHECK(h.edges[0].targets.size() == 1);

  const graph::Graph l = io::parse_edge_list(data("cancelling_edges.tsv"), make_builtin("integer_ring"));
  CHECK(l.edges[1].sources.at("a") == Value(-1));

  auto d = diagnose([&] { io::parse_edge_list("k\ta\tb\t0\n", nat); });
  CHECK(d.role == "edge-list");
  CHECK(d.column == "field 4 (out_value)");
  d = diagnose([&] { io::parse_edge_list("k\ta\tb\t1\t0\n", nat); });
  CHECK(d.column == "field 5 (in_value)");
  d = diagnose([&] { io::parse_edge_list("k\ta\n", nat); });
  CHECK(d.message == "expected 3 to 5 tab-separated fields, found 2");
  d = diagnose([&] { io::parse_edge_list("k\ta\tb\t2\nk\ta\tc\t3\n", nat); });
  CHECK(d.line == 2);
  CHECK(d.column == "field 2 (src)");
  d = diagnose([&] { io::parse_edge_list("k\ta\tb\tx\n", nat); });
  CHECK(d.column == "field 4 (out_value)");

  CHECK(io::parse_edge_list(data("empty.tsv"), nat).edges.empty());
}

TEST_CASE("finite algebra tables") {
  const FiniteAlgebraSpec spec = io::parse_finite_algebra(data("boolean.txt"));
  CHECK(spec.elements == std::vector<Value>{Value(0), Value(1)});
  CHECK(spec.zero == 0);
  CHECK(spec.one == 1);
  CHECK(spec.plus == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 1}});
  CHECK(spec.times == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}});

  auto d = diagnose([] { io::parse_finite_algebra(data("ragged_algebra.txt")); });
  CHECK(d.role == "algebra");
  CHECK(d.line == 6);
  CHECK(d.column == "plus row 2");
  CHECK(d.message == "row has 1 entries, expected 2");

  d = diagnose([] { io::parse_finite_algebra("elements: 0,1\nzero: 0\none: 2\n"); });
  CHECK(d.line == 3);
  CHECK(d.message == "unknown element '2'");

  d = diagnose([] { io::parse_finite_algebra("elements: 0,1\nzero: 0\none: 1\nplus:\n0,1\n1,1\n"); });
  CHECK(d.line == 7);
  CHECK(d.message == "missing section 'times'");

  d = diagnose([] { io::parse_finite_algebra("elements: 0,,1\n"); });
  CHECK(d.message == "empty element name");
  d = diagnose([] { io::parse_finite_algebra("elements: 0,01\n"); });
  CHECK(d.column == "elements");
  CHECK(d.message == "not a canonical integer: '01'");
  d = diagnose([] { io::parse_finite_algebra("zero: 0\n"); });
  CHECK(d.message == "missing section 'elements' before this line");
}

TEST_CASE("serialization is canonical and round-trips") {
  const Algebra nat = make_builtin("natural");
  const std::string triples = "a\tb\t3\na\tc\t1\nb\ta\t12\n";
  const auto a = from_triples(io::parse_triples(triples, nat), nat);
  CHECK(io::serialize_triples(a) == triples);
  CHECK(from_triples(io::parse_triples(io::serialize_triples(a), nat), nat) == a);

  const std::string unsorted = "b\ta\t12\na\tc\t1\na\tb\t3\n";
  CHECK(io::serialize_triples(from_triples(io::parse_triples(unsorted, nat), nat)) == triples);

  const std::string docs = data("two_docs.tsv");
  const Algebra ps = make_builtin("powerset", {{"universe", "apple,pear,plum"}});
  CHECK(io::serialize_triples(from_triples(io::parse_set_triples(docs), ps)) == docs);

  const std::string edges = "e1\ta\tb\t1\t1\ne2\tb\tc\t2\t3\n";
  const graph::Graph g = io::parse_edge_list(edges, nat);
  CHECK(io::serialize_edge_list(g) == edges);
  CHECK(io::parse_edge_list(io::serialize_edge_list(g), nat) == g);

  for (const char* name : {"boolean.txt", "nonannihilating_right.txt", "noncomm_times.txt"}) {
    const FiniteAlgebraSpec spec = io::parse_finite_algebra(data(name));
    const std::string canon = io::serialize_finite_algebra(spec);
    CHECK(io::serialize_finite_algebra(io::parse_finite_algebra(canon)) == canon);
  }
}
