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


#ifndef ASSOCGRAPH_IO_HPP
#define ASSOCGRAPH_IO_HPP

#include "assocgraph/algebra.hpp"
#include "assocgraph/array.hpp"
#include "assocgraph/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace assocgraph::io {

// All formats are UTF-8, LF-terminated and tab-delimited. Blank lines and
// lines starting with '#' are skipped. Failures throw ParseError carrying
// the first offending line.

/// `row<TAB>col<TAB>value` per line. Zero values are kept here.
std::vector<Triple> parse_triples(std::string_view text, const Algebra& alg);

/// Triples whose values are token sets, decoded without a fixed universe.
std::vector<Triple> parse_set_triples(std::string_view text);

/// `edge<TAB>src<TAB>dst[<TAB>out_value[<TAB>in_value]]`. Missing values
/// default to the algebra's one. Lines repeating an edge key add endpoints
/// to the same edge.
graph::Graph parse_edge_list(std::string_view text, const Algebra& alg);

/// Header `elements: e1,...,en`, then `zero:` and `one:` lines, then a
/// `plus:` and a `times:` section of n rows with n comma-separated names.
FiniteAlgebraSpec parse_finite_algebra(std::string_view text);

/// Sorted by (row, col); one LF-terminated line per stored entry.
std::string serialize_triples(const AssociativeArray& a);

/// One line per (edge, source, target) combination with explicit weights.
/// Isolated vertices are listed in `# isolated:` comment lines.
std::string serialize_edge_list(const graph::Graph& g);

std::string serialize_finite_algebra(const FiniteAlgebraSpec& spec);

/// Whole file as bytes. Throws Error when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace assocgraph::io

#endif  // ASSOCGRAPH_IO_HPP
