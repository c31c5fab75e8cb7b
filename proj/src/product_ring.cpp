/**************************************************************************
 * product_ring.cpp
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

#include "lcp/product_ring.hpp"

#include <algorithm>
#include <utility>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

constexpr std::uint64_t kMaxProductSize = std::uint64_t{1} << 62;

using u128 = unsigned __int128;

// a^-1 mod m for gcd(a, m) = 1, by the extended Euclidean algorithm.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  __int128 inv = s0 % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

}  // namespace

ProductRingSpec::ProductRingSpec(std::vector<ChainRingSpec> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidRingError("a product ring needs at least one component");
  for (const auto& c : components_) {
    if (size_ > kMaxProductSize / c.size()) throw InvalidRingError("product ring size exceeds 2^62");
    size_ *= c.size();
  }
}

ProductRingSpec ProductRingSpec::from_modulus(std::uint64_t m) {
  if (m < 2) throw InvalidRingError("integer modulus must be at least 2");
  std::vector<ChainRingSpec> parts;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) parts.emplace_back(p, e, 1);
  }
  if (m > 1) parts.emplace_back(m, 1, 1);
  return ProductRingSpec(std::move(parts));
}

bool ProductRingSpec::is_integer_ring() const noexcept {
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].r() != 1) return false;
    for (std::size_t k = 0; k < j; ++k) {
      if (components_[k].p() == components_[j].p()) return false;
    }
  }
  return true;
}

std::uint64_t ProductRingSpec::integer_modulus() const {
  if (!is_integer_ring()) {
    throw UnsupportedProjectionError("integer representation needs components Z/p^e with distinct primes");
  }
  return size_;
}

void ProductRingSpec::check_arity(const ProductRingElement& a) const {
  if (a.parts.size() != components_.size()) {
    throw MalformedElementError("element has " + std::to_string(a.parts.size()) + " parts, ring has " +
                                std::to_string(components_.size()) + " components");
  }
}

ProductRingElement ProductRingSpec::zero() const {
  ProductRingElement z;
  for (const auto& c : components_) z.parts.push_back(c.zero());
  return z;
}

ProductRingElement ProductRingSpec::one() const {
  ProductRingElement u;
  for (const auto& c : components_) u.parts.push_back(c.one());
  return u;
}

void ProductRingSpec::validate(const ProductRingElement& a) const {
  check_arity(a);
  for (std::size_t j = 0; j < components_.size(); ++j) components_[j].validate(a.parts[j]);
}

ProductRingElement ProductRingSpec::add(const ProductRingElement& a, const ProductRingElement& b) const {
  check_arity(a);
  check_arity(b);
  ProductRingElement c;
  c.parts.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) c.parts.push_back(components_[j].add(a.parts[j], b.parts[j]));
  return c;
}

ProductRingElement ProductRingSpec::sub(const ProductRingElement& a, const ProductRingElement& b) const {
  check_arity(a);
  check_arity(b);
  ProductRingElement c;
  c.parts.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) c.parts.push_back(components_[j].sub(a.parts[j], b.parts[j]));
  return c;
}

ProductRingElement ProductRingSpec::neg(const ProductRingElement& a) const {
  check_arity(a);
  ProductRingElement c;
  c.parts.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) c.parts.push_back(components_[j].neg(a.parts[j]));
  return c;
}

ProductRingElement ProductRingSpec::mul(const ProductRingElement& a, const ProductRingElement& b) const {
  check_arity(a);
  check_arity(b);
  ProductRingElement c;
  c.parts.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j) c.parts.push_back(components_[j].mul(a.parts[j], b.parts[j]));
  return c;
}

bool ProductRingSpec::is_zero(const ProductRingElement& a) const {
  check_arity(a);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (!components_[j].is_zero(a.parts[j])) return false;
  }
  return true;
}

bool ProductRingSpec::is_unit(const ProductRingElement& a) const {
  check_arity(a);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (!components_[j].is_unit(a.parts[j])) return false;
  }
  return true;
}

ProductRingElement ProductRingSpec::project(std::int64_t x) const {
  if (!is_integer_ring()) {
    throw UnsupportedProjectionError("cannot project an integer: ring is not Z/m (polynomial or repeated-prime components)");
  }
  ProductRingElement t;
  for (const auto& c : components_) t.parts.push_back(c.from_integer(x));
  return t;
}

std::uint64_t ProductRingSpec::lift(const ProductRingElement& t) const {
  const std::uint64_t m = integer_modulus();
  validate(t);
  // x = sum r_j * M_j * (M_j^-1 mod m_j) mod m with M_j = m / m_j.
  u128 x = 0;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const std::uint64_t mj = components_[j].characteristic();
    const std::uint64_t big = m / mj;
    const std::uint64_t inv = inverse_mod(big % mj, mj);
    x = (x + static_cast<u128>(t.parts[j].coeffs[0]) * inv % mj * big) % m;
  }
  return static_cast<std::uint64_t>(x);
}

ProductRingElement ProductRingSpec::element_at(std::uint64_t index) const {
  if (index >= size_) throw MalformedElementError("element index " + std::to_string(index) + " out of range");
  ProductRingElement t;
  for (const auto& c : components_) {
    t.parts.push_back(c.element_at(index % c.size()));
    index /= c.size();
  }
  return t;
}

std::uint64_t ProductRingSpec::index_of(const ProductRingElement& a) const {
  check_arity(a);
  std::uint64_t index = 0;
  for (std::size_t j = components_.size(); j-- > 0;) index = index * components_[j].size() + components_[j].index_of(a.parts[j]);
  return index;
}

std::string ProductRingSpec::format(const ProductRingElement& a) const {
  check_arity(a);
  if (components_.size() == 1) return components_[0].format(a.parts[0]);
  std::string out = "(";
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j > 0) out += ", ";
    out += components_[j].format(a.parts[j]);
  }
  return out + ")";
}

std::string ProductRingSpec::describe() const {
  std::string out;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j > 0) out += " x ";
    out += components_[j].describe();
  }
  return out;
}

}  // namespace lcp
