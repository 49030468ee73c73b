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


#include "assocgraph/graph.hpp"

#include <algorithm>
#include <cstdio>

namespace assocgraph::graph {

namespace {

void check_endpoints(const EdgeRecord& e, const std::map<Key, Value>& endpoints,
                     const char* role, const Algebra& alg) {
  if (endpoints.empty())
    throw ValidationError("edge '" + e.key + "' has no " + role);
  for (const auto& [vertex, weight] : endpoints) {
    if (!is_valid_key(vertex))
      throw ValidationError("edge '" + e.key + "': malformed vertex key '" + vertex + "'");
    if (!alg.contains(weight))
      throw ValidationError("edge '" + e.key + "': weight '" + weight.encode() +
                            "' is not in the carrier of " + alg.name());
    if (alg.is_zero(weight))
      throw ValidationError("edge '" + e.key + "': zero weight on " + role + " '" +
                            vertex + "'");
  }
}

std::string padded_key(char prefix, int index, int width) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%0*d", prefix, width, index);
  return buf;
}

Value nonzero_sample(const Algebra& alg, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Value v = alg.sample(rng);
    if (!alg.is_zero(v)) return v;
  }
  throw PreconditionError("algebra " + alg.name() + " has no nonzero elements to sample");
}

}  // namespace

void validate(const Graph& g, const Algebra& alg) {
  std::set<Key> seen;
  for (const EdgeRecord& e : g.edges) {
    if (!is_valid_key(e.key)) throw ValidationError("malformed edge key '" + e.key + "'");
    if (!seen.insert(e.key).second)
      throw ValidationError("duplicate edge key '" + e.key + "'");
    check_endpoints(e, e.sources, "source", alg);
    check_endpoints(e, e.targets, "target", alg);
  }
  for (const Key& v : g.isolated_vertices)
    if (!is_valid_key(v)) throw ValidationError("malformed vertex key '" + v + "'");
}

IncidencePair incidence_arrays(const Graph& g, const Algebra& alg) {
  validate(g, alg);
  std::map<Coordinate, Value> out_entries;
  std::map<Coordinate, Value> in_entries;
  for (const EdgeRecord& e : g.edges) {
    for (const auto& [vertex, weight] : e.sources) out_entries.emplace(Coordinate{e.key, vertex}, weight);
    for (const auto& [vertex, weight] : e.targets) in_entries.emplace(Coordinate{e.key, vertex}, weight);
  }
  IncidencePair p;
  p.e_out = AssociativeArray::from_map(std::move(out_entries), alg);
  p.e_in = AssociativeArray::from_map(std::move(in_entries), alg);
  p.isolated_vertices = g.isolated_vertices;
  return p;
}

AssociativeArray adjacency(const IncidencePair& p, const Algebra& alg,
                           const ZeroSkipLicense* zero_skip) {
  MatmulOptions opts;
  opts.extra_row_keys = p.isolated_vertices;
  opts.extra_col_keys = p.isolated_vertices;
  opts.zero_skip = zero_skip;
  return matmul(transpose(p.e_out), p.e_in, alg, opts);
}

AssociativeArray reverse_adjacency(const IncidencePair& p, const Algebra& alg,
                                   const ZeroSkipLicense* zero_skip) {
  MatmulOptions opts;
  opts.extra_row_keys = p.isolated_vertices;
  opts.extra_col_keys = p.isolated_vertices;
  opts.zero_skip = zero_skip;
  return matmul(transpose(p.e_in), p.e_out, alg, opts);
}

Graph reverse(const Graph& g) {
  Graph out = g;
  for (EdgeRecord& e : out.edges) std::swap(e.sources, e.targets);
  return out;
}

Support adjacency_oracle(const IncidencePair& p) {
  // Stored pattern of each incidence array, grouped by edge.
  std::map<Key, std::vector<Key>> sources_of;
  for (const auto& [coord, value] : p.e_out.entries())
    sources_of[coord.first].push_back(coord.second);
  std::map<Key, std::vector<Key>> targets_of;
  for (const auto& [coord, value] : p.e_in.entries())
    targets_of[coord.first].push_back(coord.second);

  Support out;
  for (const auto& [edge, sources] : sources_of) {
    const auto targets = targets_of.find(edge);
    if (targets == targets_of.end()) continue;
    for (const Key& x : sources)
      for (const Key& y : targets->second) out.emplace(x, y);
  }
  return out;
}

Support flip(const Support& s) {
  Support out;
  for (const auto& [x, y] : s) out.emplace(y, x);
  return out;
}

Graph random_graph(const Algebra& alg, std::mt19937_64& rng,
                   const RandomGraphParams& params) {
  const int n_vertices =
      std::uniform_int_distribution<int>(params.min_vertices, params.max_vertices)(rng);
  const int n_edges = std::uniform_int_distribution<int>(0, params.max_edges)(rng);
  std::uniform_int_distribution<int> pick_vertex(0, n_vertices - 1);
  std::bernoulli_distribution hyper(params.hyperedge_probability);
  std::bernoulli_distribution extra_on_source(0.5);

  Graph g;
  for (int k = 0; k < n_edges; ++k) {
    EdgeRecord e;
    e.key = padded_key('e', k, 2);
    e.sources.emplace(padded_key('v', pick_vertex(rng), 1), nonzero_sample(alg, rng));
    e.targets.emplace(padded_key('v', pick_vertex(rng), 1), nonzero_sample(alg, rng));
    if (hyper(rng)) {
      auto& side = extra_on_source(rng) ? e.sources : e.targets;
      side.emplace(padded_key('v', pick_vertex(rng), 1), nonzero_sample(alg, rng));
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

bool check_transpose_identity(const AssociativeArray& a, const AssociativeArray& b,
                              const Algebra& alg) {
  return transpose(matmul(a, b, alg)) == matmul(transpose(b), transpose(a), alg);
}

}  // namespace assocgraph::graph
