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

#include "assocgraph/criteria.hpp"
#include "assocgraph/errors.hpp"
#include "assocgraph/graph.hpp"
#include "assocgraph/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace assocgraph::cli {

namespace {

struct CliConfig {
  std::string algebra;
  std::string universe;
  std::optional<int> levels;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  bool force_full_matmul = false;
  int criterion = 0;
};

/// Raised for input and usage problems; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

Algebra resolve_algebra(const CliConfig& cfg) {
  if (cfg.algebra.empty()) throw UsageError("--algebra is required");
  if (is_builtin_name(cfg.algebra)) {
    BuiltinParams params;
    if (!cfg.universe.empty()) params.emplace("universe", cfg.universe);
    if (cfg.levels) params.emplace("levels", std::to_string(*cfg.levels));
    try {
      return make_builtin(cfg.algebra, params);
    } catch (const ConfigurationError& e) {
      throw UsageError(e.what());
    }
  }
  if (!cfg.universe.empty() || cfg.levels)
    throw UsageError("--universe and --levels apply only to builtin algebras");
  if (!std::filesystem::is_regular_file(cfg.algebra))
    throw UsageError("unknown algebra '" + cfg.algebra + "' (not a builtin name or a file)");
  try {
    return from_finite_spec(io::parse_finite_algebra(io::read_file(cfg.algebra)));
  } catch (const ValidationError& e) {
    throw UsageError(cfg.algebra + ": " + e.what());
  }
}

std::string read_input(const CliConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  try {
    return io::read_file(cfg.input);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void write_output(const CliConfig& cfg, const std::string& data, std::ostream& out) {
  if (cfg.output.empty()) {
    out << data;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!(file << data)) throw UsageError("cannot write '" + cfg.output + "'");
}

criteria::CriteriaReport check(const Algebra& alg, const CliConfig& cfg) {
  criteria::CheckOptions opts;
  opts.seed = cfg.seed;
  return criteria::validate(alg, opts);
}

void warn_if_uncertified(const criteria::CriteriaReport& r, std::ostream& err) {
  if (r.certified) return;
  std::string failed;
  auto note = [&](const criteria::Verdict& v, const char* label) {
    if (!v.pass) failed += (failed.empty() ? "" : ", ") + std::string(label) + " fail";
  };
  note(r.identity, "identity");
  note(r.no_additive_inverses, "criterion 1");
  note(r.zero_product, "criterion 2");
  note(r.annihilator, "criterion 3");
  if (failed.empty()) failed = "verdicts are sampled only";
  err << "warning: algebra " << r.algebra.name() << " is not certified: " << failed
      << '\n';
}

std::size_t vertex_count(const graph::Graph& g) {
  std::set<Key> vertices(g.isolated_vertices.begin(), g.isolated_vertices.end());
  for (const auto& e : g.edges) {
    for (const auto& [v, w] : e.sources) vertices.insert(v);
    for (const auto& [v, w] : e.targets) vertices.insert(v);
  }
  return vertices.size();
}

int cmd_adjacency(const CliConfig& cfg, bool reversed, std::ostream& out,
                  std::ostream& err) {
  const Algebra alg = resolve_algebra(cfg);
  const graph::Graph g = io::parse_edge_list(read_input(cfg), alg);
  const criteria::CriteriaReport report = check(alg, cfg);
  warn_if_uncertified(report, err);

  std::optional<ZeroSkipLicense> license;
  if (!cfg.force_full_matmul) license = criteria::zero_skip_license(report);
  const ZeroSkipLicense* fast = license ? &*license : nullptr;

  const graph::IncidencePair p = graph::incidence_arrays(g, alg);
  const AssociativeArray a =
      reversed ? graph::reverse_adjacency(p, alg, fast) : graph::adjacency(p, alg, fast);
  write_output(cfg, io::serialize_triples(a), out);
  err << (reversed ? "reverse-adjacency" : "adjacency") << ": vertices=" << vertex_count(g)
      << " edges=" << g.edges.size() << " nonzeros=" << a.nnz() << '\n';
  return kSuccess;
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
  const criteria::CriteriaReport report = check(resolve_algebra(cfg), cfg);
  std::string text = criteria::to_text(report);
  for (const std::string& line : criteria::to_machine_lines(report)) text += line + '\n';
  write_output(cfg, text, out);
  return report.certified ? kSuccess : kNegative;
}

std::string coord_text(const Coordinate& c) { return "(" + c.first + "," + c.second + ")"; }

int cmd_witness(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.criterion < 1 || cfg.criterion > 3)
    throw UsageError("--criterion must be 1, 2 or 3");
  const Algebra alg = resolve_algebra(cfg);
  const criteria::CriteriaReport report = check(alg, cfg);
  if (report.verdict(cfg.criterion).pass) {
    err << "no witness exists from checker output: criterion " << cfg.criterion
        << " passes for " << alg.name() << '\n';
    return kNegative;
  }
  const criteria::WitnessCase wc = criteria::witness_from_report(report, cfg.criterion);
  const criteria::Demonstration d = criteria::demonstrate(wc, alg);

  std::string text = "# criterion " + std::to_string(wc.criterion) + " witness over " +
                     alg.name() + ": " + wc.description + "\n";
  text += "[edges]\n" + io::serialize_edge_list(wc.graph);
  text += "[adjacency]\n" + io::serialize_triples(d.adjacency);
  text += "[oracle]\n";
  for (const auto& [x, y] : d.oracle) text += x + '\t' + y + '\n';
  text += "[mismatch]\n";
  std::string summary;
  for (const auto& m : d.mismatches) {
    const char* kind = m.kind == criteria::MismatchEntry::Kind::missing ? "missing" : "spurious";
    text += std::string(kind) + '\t' + m.coord.first + '\t' + m.coord.second + '\t' +
            m.value.encode() + '\n';
    summary += (summary.empty() ? "" : ", ") + std::string(kind) + " " + coord_text(m.coord);
  }
  write_output(cfg, text, out);
  err << "witness: criterion " << wc.criterion << " mismatch: " << summary << '\n';
  return kSuccess;
}

int cmd_doc_adjacency(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const AssociativeArray e =
      graph::documents_from_triples(io::parse_set_triples(read_input(cfg)));
  if (e.row_keys() != e.col_keys())
    throw UsageError("document array must have equal row and column keysets");
  if (const auto v = graph::check_word_consistency(e)) {
    write_output(cfg,
                 "violation\t" + v->i + '\t' + v->j + '\t' + v->m + '\t' + v->n + '\t' +
                     v->word + '\n',
                 out);
    err << "inconsistent documents: word '" << v->word << "' is in (" << v->i << ","
        << v->j << ") and (" << v->m << "," << v->n << ") but not in both (" << v->i
        << "," << v->n << ") and (" << v->m << "," << v->j << ")\n";
    return kNegative;
  }
  const AssociativeArray a = graph::document_adjacency(e);
  write_output(cfg, io::serialize_triples(a), out);
  err << "doc-adjacency: documents=" << e.row_keys().size() << " nonzeros=" << a.nnz()
      << '\n';
  return kSuccess;
}

void add_algebra_options(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--algebra", cfg.algebra, "Builtin algebra name or finite-algebra file")
      ->required();
  sub->add_option("--universe", cfg.universe, "Comma-separated tokens for powerset");
  sub->add_option("--levels", cfg.levels, "Number of levels for max-min-chain");
  sub->add_option("--seed", cfg.seed, "Seed for sampled criteria checks");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Adjacency arrays from incidence arrays over pluggable algebras",
               "assocgraph"};
  app.require_subcommand(1);

  auto* adjacency = app.add_subcommand("adjacency", "Build E_out^T E_in from an edge list");
  auto* reverse = app.add_subcommand("reverse-adjacency",
                                     "Build E_in^T E_out, the reversed graph's adjacency");
  for (auto* sub : {adjacency, reverse}) {
    add_algebra_options(sub, cfg);
    sub->add_option("--input", cfg.input, "Edge-list TSV")->required();
    sub->add_option("--output", cfg.output, "Output triple TSV (default stdout)");
    sub->add_flag("--force-full-matmul", cfg.force_full_matmul,
                  "Evaluate every implicit zero even for certified algebras");
  }
  auto* validate = app.add_subcommand("validate", "Check identity laws and criteria 1-3");
  add_algebra_options(validate, cfg);
  validate->add_option("--output", cfg.output, "Report file (default stdout)");

  auto* witness = app.add_subcommand("witness", "Build the counterexample graph for a failed criterion");
  add_algebra_options(witness, cfg);
  witness->add_option("--criterion", cfg.criterion, "Criterion number (1, 2 or 3)")
      ->required();
  witness->add_option("--output", cfg.output, "Output file (default stdout)");

  auto* docs = app.add_subcommand("doc-adjacency",
                                  "Shared-words adjacency of a set-valued document array");
  docs->add_option("--input", cfg.input, "Set-valued triple TSV")->required();
  docs->add_option("--output", cfg.output, "Output triple TSV (default stdout)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (adjacency->parsed()) return cmd_adjacency(cfg, false, out, err);
    if (reverse->parsed()) return cmd_adjacency(cfg, true, out, err);
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (witness->parsed()) return cmd_witness(cfg, out, err);
    return cmd_doc_adjacency(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace assocgraph::cli
