/**************************************************************************
 * group.hpp
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lcp {

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// A finite group stored as a validated Cayley table. Index 0 is always the
/// identity; table(i, j) is the index of g_i * g_j.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 256;

  /// Validates the table (shape, index range, Latin square, identity,
  /// associativity, inverses) and relabels the identity to index 0 by
  /// swapping it with the current index 0. Each failure raises a
  /// GroupValidationError with its own kind.
  static FiniteGroup from_table(const CayleyTable& table, std::vector<std::string> labels = {});

  /// Powers g^0, ..., g^(n-1).
  static FiniteGroup cyclic(std::size_t n);
  /// Order 2n: r^0..r^(n-1), then r^0 s..r^(n-1) s, with s r s^-1 = r^-1.
  static FiniteGroup dihedral(std::size_t n);
  /// Permutations of {0..m-1} in lexicographic one-line order, composed as
  /// (a*b)(i) = a(b(i)). m <= 5.
  static FiniteGroup symmetric(std::size_t m);
  /// Pairs (g, h) in lexicographic order: index g * |H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const noexcept { return n_; }
  std::size_t op(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::size_t inv(std::size_t i) const { return inv_[i]; }
  const std::vector<std::size_t>& inverses() const noexcept { return inv_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const;
  bool is_abelian() const;
  CayleyTable table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inv_;
  std::vector<std::string> labels_;
};

/// Cayley-table file: first line n, then n lines of n space-separated
/// 0-based indices.
FiniteGroup read_cayley_table(std::istream& in);
void write_cayley_table(std::ostream& out, const FiniteGroup& g);

/// A bijection on coordinates 0..n-1. Applying it to a vector moves the
/// entry at coordinate i to coordinate map[i].
struct Permutation {
  std::vector<std::size_t> map;

  static Permutation identity(std::size_t n);
  /// Throws ValidationError unless map is a bijection.
  void validate() const;
  std::size_t size() const noexcept { return map.size(); }

  template <typename T>
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[map[i]] = v[i];
    return out;
  }

  /// One-line form, e.g. "[2,0,1]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

}  // namespace lcp
