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


#ifndef ASSOCGRAPH_GRAPH_HPP
#define ASSOCGRAPH_GRAPH_HPP

#include "assocgraph/algebra.hpp"
#include "assocgraph/array.hpp"
#include "assocgraph/errors.hpp"

#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace assocgraph::graph {

/// One edge. Several sources or targets make it a hyperedge.
struct EdgeRecord {
  Key key;
  std::map<Key, Value> sources;
  std::map<Key, Value> targets;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct Graph {
  std::vector<EdgeRecord> edges;
  /// Vertices with no incident edge that must still appear as keys of the
  /// adjacency evaluation.
  std::vector<Key> isolated_vertices;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Source and target incidence arrays, both keyed by edge on rows.
struct IncidencePair {
  AssociativeArray e_out;
  AssociativeArray e_in;
  std::vector<Key> isolated_vertices;
};

/// Throws ValidationError on duplicate edge keys, bad keys, edges without a
/// source or target, and weights that are zero or outside the carrier.
void validate(const Graph& g, const Algebra& alg);

IncidencePair incidence_arrays(const Graph& g, const Algebra& alg);

/// E_outᵀ ⊕.⊗ E_in. Rows are source vertices, columns target vertices.
AssociativeArray adjacency(const IncidencePair& p, const Algebra& alg,
                           const ZeroSkipLicense* zero_skip = nullptr);

/// E_inᵀ ⊕.⊗ E_out, the adjacency array of the reversed graph.
AssociativeArray reverse_adjacency(const IncidencePair& p, const Algebra& alg,
                                   const ZeroSkipLicense* zero_skip = nullptr);

/// Swaps sources and targets of every edge.
Graph reverse(const Graph& g);

/// Pairs (x, y) joined by some edge k with stored E_out(k,x) and E_in(k,y).
/// Reads only the stored pattern; never evaluates plus or times.
Support adjacency_oracle(const IncidencePair& p);

/// {(y, x) : (x, y) in s}
Support flip(const Support& s);

struct RandomGraphParams {
  int min_vertices = 1;
  int max_vertices = 8;
  int max_edges = 20;
  /// Chance that an edge gets one extra source or target vertex.
  double hyperedge_probability = 0.1;
};

/// Random multigraph with self-loops and parallel edges allowed. Weights are
/// drawn from the algebra's nonzero elements.
Graph random_graph(const Algebra& alg, std::mt19937_64& rng,
                   const RandomGraphParams& params = {});

// Set-valued document arrays.

struct WordViolation {
  Key i, j, m, n;
  std::string word;

  friend bool operator==(const WordViolation&, const WordViolation&) = default;
};

class InconsistentDocumentsError : public PreconditionError {
 public:
  explicit InconsistentDocumentsError(WordViolation v);
  const WordViolation& violation() const noexcept { return violation_; }

 private:
  WordViolation violation_;
};

/// Checks that a word shared by E(i,j) and E(m,n) also lies in E(i,n) and
/// E(m,j). Returns the first violation in (i,j), (m,n), word order, or
/// nullopt. Throws DomainError if a stored value is not a token set.
std::optional<WordViolation> check_word_consistency(const AssociativeArray& e);

/// E(d1,d2) = words(d1) ∩ words(d2) for every document pair.
AssociativeArray shared_words_array(const std::map<Key, std::set<std::string>>& docs);

/// Document array from set-valued triples, over the powerset of the
/// tokens they mention. Empty sets are dropped as zeros.
AssociativeArray documents_from_triples(std::span<const Triple> triples);

/// Powerset algebra over every token stored in `e`.
Algebra document_algebra(const AssociativeArray& e);

/// Eᵀ ⊕.⊗ E with union and intersection. Throws InconsistentDocumentsError
/// when `e` fails the word-consistency check.
AssociativeArray document_adjacency(const AssociativeArray& e);

/// True iff (AB)ᵀ and BᵀAᵀ are equal arrays.
bool check_transpose_identity(const AssociativeArray& a, const AssociativeArray& b,
                              const Algebra& alg);

}  // namespace assocgraph::graph

#endif  // ASSOCGRAPH_GRAPH_HPP
