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

#include <iterator>

namespace assocgraph::graph {

InconsistentDocumentsError::InconsistentDocumentsError(WordViolation v)
    : PreconditionError("word '" + v.word + "' is in (" + v.i + "," + v.j + ") and (" +
                        v.m + "," + v.n + ") but not in both (" + v.i + "," + v.n +
                        ") and (" + v.m + "," + v.j + ")"),
      violation_(std::move(v)) {}

namespace {

const TokenSet& words_at(const AssociativeArray& e, const Key& row, const Key& col) {
  static const TokenSet kEmpty;
  const Value* v = e.find(row, col);
  return v ? v->as_token_set() : kEmpty;
}

Algebra powerset_over(const std::set<std::string>& vocabulary) {
  std::string universe;
  for (const auto& w : vocabulary) universe += (universe.empty() ? "" : ",") + w;
  return make_builtin("powerset", {{"universe", universe}});
}

}  // namespace

std::optional<WordViolation> check_word_consistency(const AssociativeArray& e) {
  for (const auto& [coord, value] : e.entries())
    if (!value.is_token_set())
      throw DomainError("entry (" + coord.first + "," + coord.second +
                        ") is not set-valued: " + value.encode());

  for (const auto& [ij, first] : e.entries()) {
    for (const auto& [mn, second] : e.entries()) {
      const TokenSet shared = first.as_token_set().intersect(second.as_token_set());
      if (shared.empty()) continue;
      const TokenSet& in = words_at(e, ij.first, mn.second);
      const TokenSet& mj = words_at(e, mn.first, ij.second);
      for (const std::string& w : shared.tokens())
        if (!in.contains(w) || !mj.contains(w))
          return WordViolation{ij.first, ij.second, mn.first, mn.second, w};
    }
  }
  return std::nullopt;
}

AssociativeArray shared_words_array(const std::map<Key, std::set<std::string>>& docs) {
  std::vector<Triple> triples;
  std::set<std::string> vocabulary;
  for (const auto& [d1, w1] : docs) {
    vocabulary.insert(w1.begin(), w1.end());
    for (const auto& [d2, w2] : docs) {
      std::vector<std::string> shared;
      std::set_intersection(w1.begin(), w1.end(), w2.begin(), w2.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) triples.push_back({d1, d2, Value::set(std::move(shared))});
    }
  }
  return from_triples(triples, powerset_over(vocabulary));
}

AssociativeArray documents_from_triples(std::span<const Triple> triples) {
  std::set<std::string> vocabulary;
  for (const Triple& t : triples) {
    if (!t.value.is_token_set())
      throw DomainError("triple (" + t.row + "," + t.col + ") is not set-valued: " +
                        t.value.encode());
    const auto& toks = t.value.as_token_set().tokens();
    vocabulary.insert(toks.begin(), toks.end());
  }
  return from_triples(triples, powerset_over(vocabulary));
}

Algebra document_algebra(const AssociativeArray& e) {
  std::set<std::string> vocabulary;
  for (const auto& [coord, value] : e.entries()) {
    if (!value.is_token_set())
      throw DomainError("entry (" + coord.first + "," + coord.second +
                        ") is not set-valued: " + value.encode());
    const auto& toks = value.as_token_set().tokens();
    vocabulary.insert(toks.begin(), toks.end());
  }
  return powerset_over(vocabulary);
}

AssociativeArray document_adjacency(const AssociativeArray& e) {
  if (auto violation = check_word_consistency(e))
    throw InconsistentDocumentsError(std::move(*violation));
  const Algebra alg = document_algebra(e);
  return matmul(transpose(e), e, alg);
}

}  // namespace assocgraph::graph
