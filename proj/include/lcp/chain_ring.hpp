/**************************************************************************
 * chain_ring.hpp
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

namespace lcp {

/// Polynomial coefficients, lowest degree first.
using Poly = std::vector<std::uint64_t>;

/// An element of GR(p^e, r), stored as the r coefficients of its
/// polynomial representative (lowest degree first), each in [0, p^e).
struct ChainRingElement {
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const ChainRingElement&, const ChainRingElement&) = default;
  friend auto operator<=>(const ChainRingElement&, const ChainRingElement&) = default;
};

bool is_prime(std::uint64_t n);

/// Renders coefficients as "2x^2+x+3"; the zero polynomial is "0".
std::string format_poly(const Poly& coeffs);

/// True iff the monic polynomial f (coefficients read mod p) is
/// irreducible over F_p. Uses the Ben-Or test.
bool is_irreducible_mod_p(const Poly& f, std::uint64_t p);

/// Smallest monic irreducible polynomial of degree r over F_p, lifted
/// coefficientwise to Z/p^e. Candidates are ordered by the base-p integer
/// whose most significant digit is the x^(r-1) coefficient, so the scan
/// yields x for r = 1, x^2+x+1 over F_2, x^3+x+1 over F_2, x^2+1 over F_3.
/// Returns r+1 coefficients, the last one equal to 1.
Poly default_modulus(std::uint64_t p, unsigned e, unsigned r);

/// The Galois ring GR(p^e, r) = (Z/p^e)[x]/(f), a finite chain ring whose
/// maximal ideal is generated by gamma = p, with nilpotency index e and
/// residue field F_{p^r}.
class ChainRingSpec {
 public:
  static constexpr unsigned kMaxDegree = 6;

  ChainRingSpec(std::uint64_t p, unsigned e, unsigned r);
  ChainRingSpec(std::uint64_t p, unsigned e, unsigned r, Poly modulus);

  std::uint64_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  unsigned r() const noexcept { return r_; }
  const Poly& modulus() const noexcept { return modulus_; }
  /// p^e
  std::uint64_t characteristic() const noexcept { return pe_; }
  /// q = p^r
  std::uint64_t residue_size() const noexcept { return q_; }
  /// p^(e*r)
  std::uint64_t size() const noexcept { return size_; }

  ChainRingElement zero() const;
  ChainRingElement one() const;
  /// Constant k mod p^e (k may be negative).
  ChainRingElement from_integer(std::int64_t k) const;
  ChainRingElement gamma_power(unsigned t) const;

  /// Throws MalformedElementError unless a has r coefficients in [0, p^e).
  void validate(const ChainRingElement& a) const;

  ChainRingElement add(const ChainRingElement& a, const ChainRingElement& b) const;
  ChainRingElement sub(const ChainRingElement& a, const ChainRingElement& b) const;
  ChainRingElement neg(const ChainRingElement& a) const;
  ChainRingElement mul(const ChainRingElement& a, const ChainRingElement& b) const;
  ChainRingElement pow(ChainRingElement a, std::uint64_t k) const;

  bool is_zero(const ChainRingElement& a) const;
  bool is_unit(const ChainRingElement& a) const;
  /// Residue-field inversion followed by Newton lifting.
  /// Throws NotInvertibleError for non-units.
  ChainRingElement inverse(const ChainRingElement& a) const;
  /// Largest t with a in <gamma^t>; the zero element has valuation e.
  unsigned valuation(const ChainRingElement& a) const;

  /// The unique c with representative coefficients in [0, p^(e-t)) and
  /// gamma^t * c = a. Requires valuation(a) >= t.
  ChainRingElement divide_by_gamma(const ChainRingElement& a, unsigned t) const;
  /// Canonical representative of a + <gamma^t>: coefficients reduced mod p^t.
  ChainRingElement residue_mod_gamma(const ChainRingElement& a, unsigned t) const;

  /// Elements are indexed by reading coefficients as base-p^e digits,
  /// lowest degree least significant.
  ChainRingElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const ChainRingElement& a) const;

  /// "3" for r = 1, "2x^2+x+3" style otherwise.
  std::string format(const ChainRingElement& a) const;
  /// "Z/4" for r = 1, otherwise "GR(2^1,2) mod x^2+x+1".
  std::string describe() const;

  friend bool operator==(const ChainRingSpec& a, const ChainRingSpec& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) const;

  std::uint64_t p_;
  unsigned e_;
  unsigned r_;
  std::uint64_t pe_ = 1;
  std::uint64_t q_ = 1;
  std::uint64_t size_ = 1;
  Poly modulus_;
};

}  // namespace lcp
