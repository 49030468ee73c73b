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


#include "assocgraph/array.hpp"

#include "assocgraph/errors.hpp"

#include <algorithm>
#include <future>
#include <iterator>
#include <thread>

namespace assocgraph {

namespace {

constexpr std::size_t kParallelRowThreshold = 64;

std::vector<Key> sorted_union(const std::vector<Key>& a, const std::vector<Key>& b) {
  std::vector<Key> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Key> sorted_unique(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// One row of A, or one column of B, laid out densely over the inner index.
// nullptr marks an implicit zero.
using DenseSlice = std::vector<const Value*>;

DenseSlice row_slice(const AssociativeArray& a, const Key& row,
                     const std::vector<Key>& inner) {
  DenseSlice out(inner.size(), nullptr);
  std::size_t k = 0;
  for (auto it = a.entries().lower_bound({row, Key()});
       it != a.entries().end() && it->first.first == row; ++it) {
    while (inner[k] < it->first.second) ++k;
    out[k] = &it->second;
  }
  return out;
}

std::vector<DenseSlice> column_slices(const AssociativeArray& b,
                                      const std::vector<Key>& cols,
                                      const std::vector<Key>& inner) {
  std::map<Key, std::size_t> col_pos;
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos.emplace(cols[j], j);
  std::map<Key, std::size_t> inner_pos;
  for (std::size_t k = 0; k < inner.size(); ++k) inner_pos.emplace(inner[k], k);

  std::vector<DenseSlice> out(cols.size(), DenseSlice(inner.size(), nullptr));
  for (const auto& [coord, value] : b.entries())
    out[col_pos.at(coord.second)][inner_pos.at(coord.first)] = &value;
  return out;
}

std::map<Coordinate, Value> multiply_rows(std::span<const Key> rows,
                                          const std::vector<Key>& cols,
                                          const std::vector<Key>& inner,
                                          const std::vector<DenseSlice>& b_cols,
                                          const AssociativeArray& a,
                                          const Algebra& alg) {
  std::map<Coordinate, Value> out;
  const Value& zero = alg.zero();
  for (const Key& i : rows) {
    if (inner.empty()) continue;
    const DenseSlice a_row = row_slice(a, i, inner);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const DenseSlice& b_col = b_cols[j];
      auto term = [&](std::size_t k) {
        return alg.times(a_row[k] ? *a_row[k] : zero, b_col[k] ? *b_col[k] : zero);
      };
      Value acc = term(0);
      for (std::size_t k = 1; k < inner.size(); ++k) acc = alg.plus(acc, term(k));
      if (!alg.is_zero(acc)) out.emplace(Coordinate{i, cols[j]}, std::move(acc));
    }
  }
  return out;
}

}  // namespace

bool is_valid_key(std::string_view key) {
  return !key.empty() && key.find_first_of("\t\n") == std::string_view::npos;
}

AssociativeArray AssociativeArray::assemble(std::map<Coordinate, Value> entries,
                                            std::string algebra_name) {
  AssociativeArray out;
  out.algebra_name_ = std::move(algebra_name);
  std::set<Key> cols;
  for (const auto& [coord, value] : entries) {
    if (out.rows_.empty() || out.rows_.back() != coord.first)
      out.rows_.push_back(coord.first);
    cols.insert(coord.second);
  }
  out.cols_.assign(cols.begin(), cols.end());
  out.entries_ = std::move(entries);
  return out;
}

AssociativeArray AssociativeArray::from_map(std::map<Coordinate, Value> entries,
                                            const Algebra& alg) {
  std::erase_if(entries, [&](const auto& kv) { return alg.is_zero(kv.second); });
  return assemble(std::move(entries), alg.name());
}

const Value* AssociativeArray::find(std::string_view row, std::string_view col) const {
  const auto it = entries_.find(Coordinate{Key(row), Key(col)});
  return it == entries_.end() ? nullptr : &it->second;
}

void AssociativeArray::validate(const Algebra& alg) const {
  std::set<Key> used_rows;
  std::set<Key> used_cols;
  for (const auto& [coord, value] : entries_) {
    if (alg.is_zero(value))
      throw InternalConsistencyError("stored zero at (" + coord.first + "," +
                                     coord.second + ")");
    used_rows.insert(coord.first);
    used_cols.insert(coord.second);
  }
  if (!std::equal(rows_.begin(), rows_.end(), used_rows.begin(), used_rows.end()))
    throw InternalConsistencyError("row keyset does not match stored support");
  if (!std::equal(cols_.begin(), cols_.end(), used_cols.begin(), used_cols.end()))
    throw InternalConsistencyError("column keyset does not match stored support");
}

AssociativeArray from_triples(std::span<const Triple> triples, const Algebra& alg) {
  std::map<Coordinate, Value> entries;
  for (const Triple& t : triples) {
    if (!is_valid_key(t.row) || !is_valid_key(t.col))
      throw ValidationError("malformed key in triple (" + t.row + "," + t.col + ")");
    if (!alg.contains(t.value))
      throw DomainError("value '" + t.value.encode() + "' is not in the carrier of " +
                        alg.name());
    auto [it, inserted] = entries.try_emplace(Coordinate{t.row, t.col}, t.value);
    if (!inserted) it->second = alg.plus(it->second, t.value);
  }
  return AssociativeArray::from_map(std::move(entries), alg);
}

Value get(const AssociativeArray& a, std::string_view row, std::string_view col,
          const Algebra& alg) {
  const Value* v = a.find(row, col);
  return v ? *v : alg.zero();
}

AssociativeArray transpose(const AssociativeArray& a) {
  std::map<Coordinate, Value> flipped;
  for (const auto& [coord, value] : a.entries())
    flipped.emplace(Coordinate{coord.second, coord.first}, value);
  return AssociativeArray::assemble(std::move(flipped), a.algebra_name());
}

AssociativeArray ewise_add(const AssociativeArray& a, const AssociativeArray& b,
                           const Algebra& alg) {
  std::map<Coordinate, Value> out;
  for (const auto& [coord, value] : a.entries())
    out.emplace(coord, alg.plus(value, get(b, coord.first, coord.second, alg)));
  for (const auto& [coord, value] : b.entries())
    if (!a.find(coord.first, coord.second))
      out.emplace(coord, alg.plus(alg.zero(), value));
  return AssociativeArray::from_map(std::move(out), alg);
}

AssociativeArray ewise_mult(const AssociativeArray& a, const AssociativeArray& b,
                            const Algebra& alg) {
  std::map<Coordinate, Value> out;
  for (const auto& [coord, value] : a.entries())
    out.emplace(coord, alg.times(value, get(b, coord.first, coord.second, alg)));
  for (const auto& [coord, value] : b.entries())
    if (!a.find(coord.first, coord.second))
      out.emplace(coord, alg.times(alg.zero(), value));
  return AssociativeArray::from_map(std::move(out), alg);
}

AssociativeArray matmul(const AssociativeArray& a, const AssociativeArray& b,
                        const Algebra& alg, const MatmulOptions& options) {
  if (options.zero_skip) {
    if (!options.zero_skip->algebra().same_as(alg))
      throw PreconditionError("zero-skip license was issued for " +
                              options.zero_skip->algebra().name() + ", not " +
                              alg.name());
    return matmul_stored_terms(a, b, alg);
  }

  const std::vector<Key> rows =
      sorted_union(a.row_keys(), sorted_unique(options.extra_row_keys));
  const std::vector<Key> cols =
      sorted_union(b.col_keys(), sorted_unique(options.extra_col_keys));
  const std::vector<Key> inner = sorted_union(a.col_keys(), b.row_keys());
  const std::vector<DenseSlice> b_cols = column_slices(b, cols, inner);

  const bool reorderable = alg.laws().plus_associative && alg.laws().plus_commutative;
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (!options.allow_parallel || !reorderable || rows.size() < kParallelRowThreshold ||
      workers == 1) {
    return AssociativeArray::from_map(
        multiply_rows(rows, cols, inner, b_cols, a, alg), alg);
  }

  // Each output row is still reduced sequentially in inner-key order.
  const std::size_t chunk = (rows.size() + workers - 1) / workers;
  std::vector<std::future<std::map<Coordinate, Value>>> parts;
  for (std::size_t start = 0; start < rows.size(); start += chunk) {
    const std::span<const Key> slice(rows.data() + start,
                                     std::min(chunk, rows.size() - start));
    parts.push_back(std::async(std::launch::async, [&, slice] {
      return multiply_rows(slice, cols, inner, b_cols, a, alg);
    }));
  }
  std::map<Coordinate, Value> merged;
  for (auto& part : parts) merged.merge(part.get());
  return AssociativeArray::from_map(std::move(merged), alg);
}

AssociativeArray matmul_stored_terms(const AssociativeArray& a,
                                     const AssociativeArray& b, const Algebra& alg) {
  // Column view of A: inner key -> [(row, value)].
  std::map<Key, std::vector<std::pair<const Key*, const Value*>>> a_by_col;
  for (const auto& [coord, value] : a.entries())
    a_by_col[coord.second].emplace_back(&coord.first, &value);

  std::map<Coordinate, Value> acc;
  auto b_it = b.entries().begin();
  for (const auto& [k, a_col] : a_by_col) {
    while (b_it != b.entries().end() && b_it->first.first < k) ++b_it;
    auto b_row_end = b_it;
    while (b_row_end != b.entries().end() && b_row_end->first.first == k) ++b_row_end;
    for (const auto& [i, av] : a_col) {
      for (auto it = b_it; it != b_row_end; ++it) {
        Value term = alg.times(*av, it->second);
        auto [slot, fresh] = acc.try_emplace(Coordinate{*i, it->first.second}, term);
        if (!fresh) slot->second = alg.plus(slot->second, term);
      }
    }
    b_it = b_row_end;
  }
  return AssociativeArray::from_map(std::move(acc), alg);
}

Support support(const AssociativeArray& a) {
  Support out;
  for (const auto& [coord, value] : a.entries()) out.insert(out.end(), coord);
  return out;
}

bool equal_support(const AssociativeArray& a, const AssociativeArray& b) {
  return a.nnz() == b.nnz() &&
         std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

std::vector<Triple> to_triples(const AssociativeArray& a) {
  std::vector<Triple> out;
  out.reserve(a.nnz());
  for (const auto& [coord, value] : a.entries())
    out.push_back(Triple{coord.first, coord.second, value});
  return out;
}

}  // namespace assocgraph
