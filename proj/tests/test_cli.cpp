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


#include "assocgraph/cli.hpp"
#include "assocgraph/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace assocgraph;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ASSOCGRAPH_TEST_DATA) + "/" + name; }

std::string golden(const char* name) {
  return io::read_file(std::string(ASSOCGRAPH_GOLDEN) + "/" + name);
}

}  // namespace

TEST_CASE("adjacency over natural numbers") {
  const Result r = run({"adjacency", "--algebra", "natural", "--input", data("path.tsv")});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == golden("adjacency_path.tsv"));
  CHECK(r.err == "adjacency: vertices=3 edges=2 nonzeros=2\n");

  const Result full = run({"adjacency", "--algebra", "natural", "--input", data("path.tsv"),
                           "--force-full-matmul"});
  CHECK(full.out == r.out);
}

TEST_CASE("reverse adjacency") {
  const Result r =
      run({"reverse-adjacency", "--algebra", "natural", "--input", data("path.tsv")});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "b\ta\t1\nc\tb\t1\n");
}

TEST_CASE("uncertified algebras warn and still compute") {
  const Result r =
      run({"adjacency", "--algebra", "integer-ring", "--input", data("cancelling_edges.tsv")});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  CHECK(r.err.find("warning: algebra integer_ring is not certified: criterion 1 fail") !=
        std::string::npos);
}

TEST_CASE("empty edge list") {
  const Result r = run({"adjacency", "--algebra", "natural", "--input", data("empty.tsv")});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
}

TEST_CASE("validate exit codes") {
  const Result nat = run({"validate", "--algebra", "natural"});
  CHECK(nat.code == cli::kSuccess);
  CHECK(nat.out == golden("validate_natural.txt"));

  const Result ps = run({"validate", "--algebra", "powerset", "--universe", "x,y"});
  CHECK(ps.code == cli::kNegative);
  CHECK(ps.out.find("crit2\tfail\t{x}\t{y}\n") != std::string::npos);

  const Result file = run({"validate", "--algebra", data("boolean.txt")});
  CHECK(file.code == cli::kSuccess);

  const Result ragged = run({"validate", "--algebra", data("ragged_algebra.txt")});
  CHECK(ragged.code == cli::kInputError);
  CHECK(ragged.err.find("plus row 2") != std::string::npos);
}

TEST_CASE("witness subcommand") {
  const Result r = run({"witness", "--algebra", "integer-ring", "--criterion", "1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == golden("witness_crit1_integer_ring.txt"));
  CHECK(r.err == "witness: criterion 1 mismatch: missing (a,b)\n");

  const Result nonann = run({"witness", "--algebra", data("nonannihilating_right.txt"), "--criterion", "3"});
  CHECK(nonann.code == cli::kSuccess);
  CHECK(nonann.out.find("spurious\ta\tb\tv\n") != std::string::npos);

  const Result none = run({"witness", "--algebra", "natural", "--criterion", "1"});
  CHECK(none.code == cli::kNegative);
  CHECK(none.out.empty());
  CHECK(none.err.find("no witness exists from checker output") != std::string::npos);

  CHECK(run({"witness", "--algebra", "natural", "--criterion", "4"}).code == cli::kInputError);
}

TEST_CASE("doc-adjacency") {
  const Result r = run({"doc-adjacency", "--input", data("two_docs.tsv")});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == golden("doc_adjacency_two_docs.tsv"));

  const Result bad = run({"doc-adjacency", "--input", data("inconsistent_docs.tsv")});
  CHECK(bad.code == cli::kNegative);
  CHECK(bad.out.rfind("violation\t", 0) == 0);
}

TEST_CASE("input errors") {
  CHECK(run({"adjacency", "--algebra", "natural", "--input", data("missing.tsv")}).code ==
        cli::kInputError);
  CHECK(run({"adjacency", "--algebra", "no-such-algebra", "--input", data("path.tsv")}).code ==
        cli::kInputError);
  CHECK(run({"adjacency", "--input", data("path.tsv")}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"validate", "--algebra", "max-min-chain", "--levels", "0"}).code ==
        cli::kInputError);
}

TEST_CASE("--output writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "assocgraph_cli_out.tsv";
  const Result r = run({"adjacency", "--algebra", "natural", "--input", data("path.tsv"),
                        "--output", path.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  CHECK(io::read_file(path) == golden("adjacency_path.tsv"));
  std::filesystem::remove(path);
}
