/**************************************************************************
 * product_ring.hpp
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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lcp/chain_ring.hpp"

namespace lcp {

/// An element of R_1 x ... x R_s, i.e. the image (r + m_1^e_1, ..., r + m_s^e_s)
/// of some r under the canonical CRT map.
struct ProductRingElement {
  std::vector<ChainRingElement> parts;

  friend bool operator==(const ProductRingElement&, const ProductRingElement&) = default;
  friend auto operator<=>(const ProductRingElement&, const ProductRingElement&) = default;
};

/// A finite principal ideal ring presented as an ordered product of chain
/// rings. Elements always live on the tuple side; integers are only an I/O
/// convenience available when every component is Z/p^e.
class ProductRingSpec {
 public:
  explicit ProductRingSpec(std::vector<ChainRingSpec> components);

  /// Z/m split into its prime-power factors, in increasing prime order.
  static ProductRingSpec from_modulus(std::uint64_t m);

  const std::vector<ChainRingSpec>& components() const noexcept { return components_; }
  const ChainRingSpec& component(std::size_t j) const { return components_.at(j); }
  std::size_t arity() const noexcept { return components_.size(); }
  std::uint64_t size() const noexcept { return size_; }

  /// True when every component is Z/p^e and the primes are distinct, so the
  /// ring is Z/m.
  bool is_integer_ring() const noexcept;
  /// m = prod p_j^e_j; throws UnsupportedProjectionError unless is_integer_ring().
  std::uint64_t integer_modulus() const;

  ProductRingElement zero() const;
  ProductRingElement one() const;
  void validate(const ProductRingElement& a) const;

  ProductRingElement add(const ProductRingElement& a, const ProductRingElement& b) const;
  ProductRingElement sub(const ProductRingElement& a, const ProductRingElement& b) const;
  ProductRingElement neg(const ProductRingElement& a) const;
  ProductRingElement mul(const ProductRingElement& a, const ProductRingElement& b) const;
  bool is_zero(const ProductRingElement& a) const;
  bool is_unit(const ProductRingElement& a) const;

  /// x -> (x mod p_1^e_1, ..., x mod p_s^e_s). Integer input needs an
  /// integer ring; otherwise UnsupportedProjectionError.
  ProductRingElement project(std::int64_t x) const;
  /// Inverse of project: the unique integer in [0, m) with the given residues.
  std::uint64_t lift(const ProductRingElement& t) const;

  /// Mixed-radix index with component 0 least significant.
  ProductRingElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const ProductRingElement& a) const;

  /// "(3, 1)" for s > 1, the bare component string for s = 1.
  std::string format(const ProductRingElement& a) const;
  std::string describe() const;

  friend bool operator==(const ProductRingSpec& a, const ProductRingSpec& b) {
    return a.components_ == b.components_;
  }

 private:
  void check_arity(const ProductRingElement& a) const;

  std::vector<ChainRingSpec> components_;
  std::uint64_t size_ = 1;
};

}  // namespace lcp
