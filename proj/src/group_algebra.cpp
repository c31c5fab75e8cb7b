/**************************************************************************
 * group_algebra.cpp
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

#include "lcp/group_algebra.hpp"

#include "lcp/errors.hpp"

namespace lcp {

GroupAlgebra::GroupAlgebra(ProductRingSpec ring, FiniteGroup group) : ring_(std::move(ring)), group_(std::move(group)) {}

BigInt GroupAlgebra::size() const {
  BigInt total = 1;
  for (std::size_t i = 0; i < dimension(); ++i) total *= ring_.size();
  return total;
}

void GroupAlgebra::check(const AlgebraElement& a) const {
  if (a.coeffs.size() != dimension()) {
    throw LengthMismatchError("algebra element has " + std::to_string(a.coeffs.size()) + " coefficients, group has " +
                              std::to_string(dimension()) + " elements");
  }
}

void GroupAlgebra::validate(const AlgebraElement& a) const {
  check(a);
  for (const auto& c : a.coeffs) ring_.validate(c);
}

AlgebraElement GroupAlgebra::zero() const { return AlgebraElement{std::vector<ProductRingElement>(dimension(), ring_.zero())}; }

AlgebraElement GroupAlgebra::one() const { return basis(0); }

AlgebraElement GroupAlgebra::basis(std::size_t i) const {
  if (i >= dimension()) throw LengthMismatchError("group index " + std::to_string(i) + " out of range");
  AlgebraElement a = zero();
  a.coeffs[i] = ring_.one();
  return a;
}

std::vector<ProductRingElement> GroupAlgebra::to_vector(const AlgebraElement& a) const {
  validate(a);
  return a.coeffs;
}

AlgebraElement GroupAlgebra::from_vector(std::vector<ProductRingElement> v) const {
  AlgebraElement a{std::move(v)};
  validate(a);
  return a;
}

AlgebraElement GroupAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement c;
  c.coeffs.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) c.coeffs.push_back(ring_.add(a.coeffs[i], b.coeffs[i]));
  return c;
}

AlgebraElement GroupAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement c;
  c.coeffs.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) c.coeffs.push_back(ring_.sub(a.coeffs[i], b.coeffs[i]));
  return c;
}

AlgebraElement GroupAlgebra::neg(const AlgebraElement& a) const {
  check(a);
  AlgebraElement c;
  c.coeffs.reserve(dimension());
  for (const auto& x : a.coeffs) c.coeffs.push_back(ring_.neg(x));
  return c;
}

AlgebraElement GroupAlgebra::scale(const ProductRingElement& r, const AlgebraElement& a) const {
  check(a);
  AlgebraElement c;
  c.coeffs.reserve(dimension());
  for (const auto& x : a.coeffs) c.coeffs.push_back(ring_.mul(r, x));
  return c;
}

AlgebraElement GroupAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  const std::size_t n = dimension();
  AlgebraElement c = zero();
  for (std::size_t i = 0; i < n; ++i) {
    ProductRingElement acc = ring_.zero();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& bj = b.coeffs[group_.op(group_.inv(j), i)];
      if (ring_.is_zero(a.coeffs[j]) || ring_.is_zero(bj)) continue;
      acc = ring_.add(acc, ring_.mul(a.coeffs[j], bj));
    }
    c.coeffs[i] = std::move(acc);
  }
  return c;
}

AlgebraElement GroupAlgebra::left_shift(std::size_t g, const AlgebraElement& a) const {
  check(a);
  AlgebraElement c = zero();
  for (std::size_t i = 0; i < dimension(); ++i) c.coeffs[group_.op(g, i)] = a.coeffs[i];
  return c;
}

AlgebraElement GroupAlgebra::right_shift(const AlgebraElement& a, std::size_t g) const {
  check(a);
  AlgebraElement c = zero();
  for (std::size_t i = 0; i < dimension(); ++i) c.coeffs[group_.op(i, g)] = a.coeffs[i];
  return c;
}

bool GroupAlgebra::is_zero(const AlgebraElement& a) const {
  check(a);
  for (const auto& x : a.coeffs) {
    if (!ring_.is_zero(x)) return false;
  }
  return true;
}

GroupAlgebra GroupAlgebra::component_algebra(std::size_t j) const {
  return GroupAlgebra(ProductRingSpec({ring_.component(j)}), group_);
}

std::vector<AlgebraElement> GroupAlgebra::crt_project(const AlgebraElement& a) const {
  validate(a);
  std::vector<AlgebraElement> parts(ring_.arity());
  for (std::size_t j = 0; j < ring_.arity(); ++j) {
    parts[j].coeffs.reserve(dimension());
    for (const auto& x : a.coeffs) parts[j].coeffs.push_back(ProductRingElement{{x.parts[j]}});
  }
  return parts;
}

AlgebraElement GroupAlgebra::crt_lift(const std::vector<AlgebraElement>& parts) const {
  if (parts.size() != ring_.arity()) {
    throw AlgebraMismatchError("expected " + std::to_string(ring_.arity()) + " components, got " +
                               std::to_string(parts.size()));
  }
  AlgebraElement a = zero();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].coeffs.size() != dimension()) throw AlgebraMismatchError("component element over a different group");
    for (std::size_t i = 0; i < dimension(); ++i) {
      const auto& c = parts[j].coeffs[i];
      if (c.parts.size() != 1) throw AlgebraMismatchError("component element is not over a chain ring");
      ring_.component(j).validate(c.parts[0]);
      a.coeffs[i].parts[j] = c.parts[0];
    }
  }
  return a;
}

RingVector GroupAlgebra::component_vector(const AlgebraElement& a, std::size_t j) const {
  check(a);
  RingVector v;
  v.reserve(dimension());
  for (const auto& x : a.coeffs) v.push_back(x.parts.at(j));
  return v;
}

AlgebraElement GroupAlgebra::from_component_vectors(const std::vector<RingVector>& parts) const {
  if (parts.size() != ring_.arity()) throw AlgebraMismatchError("wrong number of component vectors");
  AlgebraElement a = zero();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].size() != dimension()) throw LengthMismatchError("component vector has the wrong length");
    for (std::size_t i = 0; i < dimension(); ++i) {
      ring_.component(j).validate(parts[j][i]);
      a.coeffs[i].parts[j] = parts[j][i];
    }
  }
  return a;
}

AlgebraElement GroupAlgebra::element_at(std::uint64_t index) const {
  AlgebraElement a;
  a.coeffs.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    a.coeffs.push_back(ring_.element_at(index % ring_.size()));
    index /= ring_.size();
  }
  return a;
}

std::string GroupAlgebra::format(const AlgebraElement& a) const {
  check(a);
  std::string out;
  const ProductRingElement unit = ring_.one();
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto& c = a.coeffs[i];
    if (ring_.is_zero(c)) continue;
    if (!out.empty()) out += '+';
    std::string coeff = ring_.format(c);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (c != unit) {
      if (coeff.find('+') != std::string::npos && coeff.front() != '(') coeff = "(" + coeff + ")";
      out += coeff;
    }
    out += group_.label(i);
  }
  return out.empty() ? "0" : out;
}

std::string GroupAlgebra::describe() const {
  return "(" + ring_.describe() + ")[G], |G| = " + std::to_string(dimension());
}

}  // namespace lcp
