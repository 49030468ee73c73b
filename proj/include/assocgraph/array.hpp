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


#ifndef ASSOCGRAPH_ARRAY_HPP
#define ASSOCGRAPH_ARRAY_HPP

#include "assocgraph/algebra.hpp"
#include "assocgraph/value.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assocgraph {

/// Row or column key: a non-empty string without tab or newline. Keys order
/// by byte-wise lexicographic comparison.
using Key = std::string;
using Coordinate = std::pair<Key, Key>;
using Support = std::set<Coordinate>;

bool is_valid_key(std::string_view key);

struct Triple {
  Key row;
  Key col;
  Value value;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Sparse map K1 x K2 -> V that stores only nonzero values.
///
/// The keysets are exactly the rows and columns of the stored support, so
/// the array never has an empty row or column. Arrays are immutable; every
/// operation returns a new one.
class AssociativeArray {
 public:
  AssociativeArray() = default;

  /// Drops zero values and derives both keysets from what remains.
  static AssociativeArray from_map(std::map<Coordinate, Value> entries,
                                   const Algebra& alg);

  const std::vector<Key>& row_keys() const noexcept { return rows_; }
  const std::vector<Key>& col_keys() const noexcept { return cols_; }
  const std::map<Coordinate, Value>& entries() const noexcept { return entries_; }
  const std::string& algebra_name() const noexcept { return algebra_name_; }

  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Stored value, or nullptr when the coordinate is implicit zero.
  const Value* find(std::string_view row, std::string_view col) const;

  /// Throws InternalConsistencyError if a stored value is zero, a key is
  /// unused, or an entry uses a key missing from the keysets.
  void validate(const Algebra& alg) const;

  /// Keysets and entries; the algebra tag is not compared.
  friend bool operator==(const AssociativeArray& a, const AssociativeArray& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  // Entries must already be nonzero.
  static AssociativeArray assemble(std::map<Coordinate, Value> entries,
                                   std::string algebra_name);
  friend AssociativeArray transpose(const AssociativeArray& a);

  std::vector<Key> rows_;
  std::vector<Key> cols_;
  std::map<Coordinate, Value> entries_;
  std::string algebra_name_;
};

namespace criteria {
struct LicenseIssuer;
}

/// Proof that an algebra's zero annihilates and is a two-sided additive
/// identity, which makes skipping implicit-zero terms exact. Only the
/// criteria validator can issue one.
class ZeroSkipLicense {
 public:
  const Algebra& algebra() const noexcept { return algebra_; }

 private:
  explicit ZeroSkipLicense(Algebra alg) : algebra_(std::move(alg)) {}
  friend struct criteria::LicenseIssuer;

  Algebra algebra_;
};

struct MatmulOptions {
  /// Output keys evaluated even though no stored entry uses them; their
  /// operand entries read as zero.
  std::vector<Key> extra_row_keys;
  std::vector<Key> extra_col_keys;
  /// Switches to the stored-terms kernel. Must match the algebra in use.
  const ZeroSkipLicense* zero_skip = nullptr;
  /// Row partitioning across threads; honored only when the algebra
  /// declares plus associative and commutative.
  bool allow_parallel = true;
};

/// Builds an array from a triple stream. Duplicate coordinates are folded
/// with plus in input order; zero results are dropped.
AssociativeArray from_triples(std::span<const Triple> triples, const Algebra& alg);

/// Stored value, or the algebra's zero for any other coordinate.
Value get(const AssociativeArray& a, std::string_view row, std::string_view col,
          const Algebra& alg);

AssociativeArray transpose(const AssociativeArray& a);

AssociativeArray ewise_add(const AssociativeArray& a, const AssociativeArray& b,
                           const Algebra& alg);

/// Evaluated over the union of both supports, so v ⊗ 0 terms are computed
/// rather than assumed to vanish.
AssociativeArray ewise_mult(const AssociativeArray& a, const AssociativeArray& b,
                            const Algebra& alg);

/// C = A ⊕.⊗ B. The inner index runs over the union of A's columns and B's
/// rows in ascending key order; C(i,j) is the left fold with plus of
/// A(i,k) ⊗ B(k,j), implicit zeros included. An empty fold is zero.
AssociativeArray matmul(const AssociativeArray& a, const AssociativeArray& b,
                        const Algebra& alg, const MatmulOptions& options = {});

/// Product restricted to terms where both operands are stored. Same inner
/// order as matmul. Equal to matmul only when zero annihilates and is a
/// two-sided additive identity.
AssociativeArray matmul_stored_terms(const AssociativeArray& a,
                                     const AssociativeArray& b, const Algebra& alg);

Support support(const AssociativeArray& a);
bool equal_support(const AssociativeArray& a, const AssociativeArray& b);

/// All entries sorted by (row, col).
std::vector<Triple> to_triples(const AssociativeArray& a);

}  // namespace assocgraph

#endif  // ASSOCGRAPH_ARRAY_HPP
