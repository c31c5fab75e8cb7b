/**************************************************************************
 * chain_linalg.hpp
 *
 * Copyright 2026 The lcpcodes Authors
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
 **************************************************************************/

// Submodules of R^n over a single Galois ring R.
//
// A submodule is kept in pivot (Howell) form: rows with strictly increasing
// pivot columns, pivot entries exactly gamma^t, zeros below each pivot,
// entries above a pivot reduced to canonical representatives mod gamma^t,
// and the saturation property that gamma^(e-t) * row lies in the span of
// the later rows. With that property every codeword has a unique expansion
// sum a_j row_j with a_j ranging over a transversal of R / <gamma^(e-t_j)>,
// so |span| = prod q^(e - t_j) and the form is unique per submodule.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcp/chain_ring.hpp"

namespace lcp {

using BigInt = boost::multiprecision::cpp_int;
using RingVector = std::vector<ChainRingElement>;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

struct RingMatrix {
  ChainRingSpec ring;
  std::size_t cols = 0;
  std::vector<RingVector> rows;
};

struct PivotForm {
  ChainRingSpec ring;
  std::size_t cols = 0;
  std::vector<RingVector> rows;
  std::vector<std::size_t> pivot_cols;
  /// gamma-valuation t_j of each pivot entry, in [0, e).
  std::vector<unsigned> pivot_vals;

  bool empty() const noexcept { return rows.empty(); }
  RingMatrix as_matrix() const { return RingMatrix{ring, cols, rows}; }

  friend bool operator==(const PivotForm& a, const PivotForm& b) {
    return a.ring == b.ring && a.cols == b.cols && a.rows == b.rows && a.pivot_cols == b.pivot_cols &&
           a.pivot_vals == b.pivot_vals;
  }
};

PivotForm pivot_reduce(const RingMatrix& m);

/// Reduces v against the pivots whose column is below col_limit. Returns
/// nullopt when some pivot column entry has valuation below the pivot's.
std::optional<RingVector> reduce_vector(const RingVector& v, const PivotForm& form,
                                        std::size_t col_limit = static_cast<std::size_t>(-1));

bool membership(const RingVector& v, const PivotForm& form);

/// Generators, in pivot form, of {x : M x^T = 0}.
PivotForm kernel(const RingMatrix& m);

/// Span of the union of both row sets.
PivotForm sum_forms(const PivotForm& a, const PivotForm& b);
/// Annihilator under the standard bilinear form: kernel of the rows.
PivotForm dual_form(const PivotForm& a);
/// a intersect b, computed as (a^perp + b^perp)^perp.
PivotForm intersect_forms(const PivotForm& a, const PivotForm& b);

/// prod_j q^(e - t_j)
BigInt cardinality(const PivotForm& form);

/// Restartable, deterministic enumeration of every vector in the span of a
/// pivot form. Coefficient a_j of row j runs over elements whose
/// coefficients lie in [0, p^(e-t_j)); the first row varies slowest.
class CodewordEnumerator {
 public:
  /// Throws EnumerationTooLargeError if the span exceeds cap.
  explicit CodewordEnumerator(const PivotForm& form, std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const noexcept { return count_; }
  /// Writes the next codeword to out; false once exhausted.
  bool next(RingVector& out);
  void restart();

 private:
  PivotForm form_;
  std::uint64_t count_ = 1;
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint64_t> digits_;
  bool done_ = false;
};

std::vector<RingVector> enumerate_codewords(const PivotForm& form, std::uint64_t cap = kDefaultEnumerationCap);

bool is_zero_vector(const ChainRingSpec& ring, const RingVector& v);
/// Standard bilinear form sum_i x_i y_i.
ChainRingElement inner_product(const ChainRingSpec& ring, const RingVector& x, const RingVector& y);

/// Rows separated by "; ", entries by spaces, e.g. "[2 0; 0 2]"; "[]" if empty.
std::string format_form(const PivotForm& form);

}  // namespace lcp
