/**************************************************************************
 * group_algebra.hpp
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

#include <cstdint>
#include <string>
#include <vector>

#include "lcp/chain_linalg.hpp"
#include "lcp/group.hpp"
#include "lcp/product_ring.hpp"

namespace lcp {

/// sum_i a_{g_i} g_i, stored as its coefficient vector in group-index order.
struct AlgebraElement {
  std::vector<ProductRingElement> coeffs;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend auto operator<=>(const AlgebraElement&, const AlgebraElement&) = default;
};

/// The group ring R[G] over a product ring R = R_1 x ... x R_s. The chain
/// ring case is s = 1.
class GroupAlgebra {
 public:
  GroupAlgebra(ProductRingSpec ring, FiniteGroup group);

  const ProductRingSpec& ring() const noexcept { return ring_; }
  const FiniteGroup& group() const noexcept { return group_; }
  /// n = |G|
  std::size_t dimension() const noexcept { return group_.order(); }
  /// |R|^n
  BigInt size() const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  /// The basis element g_i.
  AlgebraElement basis(std::size_t i) const;
  void validate(const AlgebraElement& a) const;

  /// Coordinate map to R^n and back.
  std::vector<ProductRingElement> to_vector(const AlgebraElement& a) const;
  AlgebraElement from_vector(std::vector<ProductRingElement> v) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement neg(const AlgebraElement& a) const;
  AlgebraElement scale(const ProductRingElement& r, const AlgebraElement& a) const;
  /// Convolution: the coefficient at g_i is sum_j a_{g_j} b_{g_j^-1 g_i}.
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  /// g_i * a and a * g_i, by permuting coefficients.
  AlgebraElement left_shift(std::size_t i, const AlgebraElement& a) const;
  AlgebraElement right_shift(const AlgebraElement& a, std::size_t i) const;
  bool is_zero(const AlgebraElement& a) const;

  /// R_j[G].
  GroupAlgebra component_algebra(std::size_t j) const;
  /// Splits a into its s component elements over R_j[G].
  std::vector<AlgebraElement> crt_project(const AlgebraElement& a) const;
  /// Inverse of crt_project.
  AlgebraElement crt_lift(const std::vector<AlgebraElement>& parts) const;

  /// Coordinates of the j-th component of a, as a vector over R_j.
  RingVector component_vector(const AlgebraElement& a, std::size_t j) const;
  /// Assembles an element from one coordinate vector per component.
  AlgebraElement from_component_vectors(const std::vector<RingVector>& parts) const;

  /// Elements in mixed-radix order over (coefficient 0 least significant).
  AlgebraElement element_at(std::uint64_t index) const;

  /// "1+2g+g^2" style, using group labels; the zero element is "0".
  std::string format(const AlgebraElement& a) const;
  std::string describe() const;

  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) {
    return a.ring_ == b.ring_ && a.group_ == b.group_;
  }

 private:
  void check(const AlgebraElement& a) const;

  ProductRingSpec ring_;
  FiniteGroup group_;
};

}  // namespace lcp
