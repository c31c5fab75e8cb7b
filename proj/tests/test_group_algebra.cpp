/**************************************************************************
 * test_group_algebra.cpp
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

#include <doctest.h>

#include <random>

#include "lcp/errors.hpp"
#include "lcp/group_algebra.hpp"
#include "oracle.hpp"

using lcp::AlgebraElement;
using lcp::FiniteGroup;
using lcp::GroupAlgebra;
using lcp::ProductRingSpec;

namespace {

GroupAlgebra integer_algebra(std::uint64_t m, const FiniteGroup& g) {
  return GroupAlgebra(ProductRingSpec::from_modulus(m), g);
}

AlgebraElement ints(const GroupAlgebra& alg, std::initializer_list<std::int64_t> xs) {
  AlgebraElement a;
  for (auto x : xs) a.coeffs.push_back(alg.ring().project(x));
  return a;
}

AlgebraElement random_element(const GroupAlgebra& alg, std::mt19937_64& rng) {
  AlgebraElement a;
  for (std::size_t i = 0; i < alg.dimension(); ++i) a.coeffs.push_back(alg.ring().element_at(rng() % alg.ring().size()));
  return a;
}

}  // namespace

TEST_CASE("coordinate vectors") {
  const auto alg = integer_algebra(2, FiniteGroup::cyclic(3));
  const auto a = ints(alg, {1, 1, 0});
  CHECK(alg.to_vector(a) == ints(alg, {1, 1, 0}).coeffs);
  CHECK(alg.to_vector(alg.zero()) == std::vector<lcp::ProductRingElement>(3, alg.ring().zero()));
  CHECK(alg.from_vector(alg.to_vector(a)) == a);
  CHECK_THROWS_AS(alg.from_vector({alg.ring().one()}), lcp::LengthMismatchError);
  CHECK(alg.format(a) == "1+g");
  CHECK(alg.size() == 8);
}

TEST_CASE("addition and scaling") {
  const auto alg = integer_algebra(6, FiniteGroup::cyclic(2));
  CHECK(alg.add(ints(alg, {3, 4}), ints(alg, {3, 2})) == alg.zero());
  CHECK(alg.scale(alg.ring().zero(), ints(alg, {1, 5})) == alg.zero());
  CHECK(alg.scale(alg.ring().project(5), ints(alg, {1, 1})) == ints(alg, {5, 5}));
}

TEST_CASE("convolution examples") {
  const auto f2 = integer_algebra(2, FiniteGroup::cyclic(3));
  CHECK(f2.mul(ints(f2, {1, 1, 0}), ints(f2, {1, 1, 1})) == f2.zero());
  const auto z6 = integer_algebra(6, FiniteGroup::cyclic(3));
  CHECK(z6.mul(ints(z6, {1, 1, 0}), ints(z6, {1, 1, 1})) == ints(z6, {2, 2, 2}));
  CHECK(z6.mul(z6.one(), ints(z6, {4, 0, 5})) == ints(z6, {4, 0, 5}));
}

TEST_CASE("convolution matches the pairwise oracle on non-abelian groups") {
  std::mt19937_64 rng(11);
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}) {
    const auto alg = integer_algebra(4, g);
    const auto t = oracle::Tables::of(alg.ring());
    for (int i = 0; i < 30; ++i) {
      const auto a = random_element(alg, rng), b = random_element(alg, rng);
      CHECK(oracle::to_word(alg, alg.mul(a, b)) == oracle::convolve(t, g, oracle::to_word(alg, a), oracle::to_word(alg, b)));
    }
  }
}

TEST_CASE("associativity and distributivity") {
  const auto f2c2 = integer_algebra(2, FiniteGroup::cyclic(2));
  std::vector<AlgebraElement> all;
  for (std::uint64_t i = 0; i < 4; ++i) all.push_back(f2c2.element_at(i));
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        CHECK(f2c2.mul(f2c2.mul(a, b), c) == f2c2.mul(a, f2c2.mul(b, c)));
        CHECK(f2c2.mul(a, f2c2.add(b, c)) == f2c2.add(f2c2.mul(a, b), f2c2.mul(a, c)));
      }
    }
  }
  std::mt19937_64 rng(5);
  const auto z6c3 = integer_algebra(6, FiniteGroup::cyclic(3));
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(z6c3, rng), b = random_element(z6c3, rng), c = random_element(z6c3, rng);
    CHECK(z6c3.mul(z6c3.mul(a, b), c) == z6c3.mul(a, z6c3.mul(b, c)));
    CHECK(z6c3.mul(z6c3.add(a, b), c) == z6c3.add(z6c3.mul(a, c), z6c3.mul(b, c)));
  }
}

TEST_CASE("commutativity follows the group") {
  const auto f2c3 = integer_algebra(2, FiniteGroup::cyclic(3));
  for (std::uint64_t i = 0; i < 8; ++i) {
    for (std::uint64_t k = 0; k < 8; ++k) {
      CHECK(f2c3.mul(f2c3.element_at(i), f2c3.element_at(k)) == f2c3.mul(f2c3.element_at(k), f2c3.element_at(i)));
    }
  }
  const auto s3 = integer_algebra(2, FiniteGroup::symmetric(3));
  bool witness = false;
  for (std::size_t i = 0; i < 6 && !witness; ++i) {
    for (std::size_t k = 0; k < 6 && !witness; ++k) {
      witness = s3.mul(s3.basis(i), s3.basis(k)) != s3.mul(s3.basis(k), s3.basis(i));
    }
  }
  CHECK(witness);
}

TEST_CASE("CRT projection and lift") {
  const auto alg = integer_algebra(6, FiniteGroup::cyclic(2));
  const auto parts = alg.crt_project(ints(alg, {3, 4}));
  REQUIRE(parts.size() == 2);
  const auto a0 = alg.component_algebra(0), a1 = alg.component_algebra(1);
  CHECK(parts[0] == ints(a0, {1, 0}));
  CHECK(parts[1] == ints(a1, {0, 1}));
  CHECK(alg.crt_lift(parts) == ints(alg, {3, 4}));
  CHECK(alg.crt_lift({a0.zero(), a1.zero()}) == alg.zero());
  for (const auto& p : alg.crt_project(alg.zero())) CHECK(p == a0.zero());
  CHECK_THROWS_AS(alg.crt_lift({a0.zero()}), lcp::AlgebraMismatchError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(alg, rng);
    CHECK(alg.crt_lift(alg.crt_project(a)) == a);
  }
}

TEST_CASE("projection is a homomorphism") {
  std::mt19937_64 rng(17);
  for (const auto& alg : {integer_algebra(6, FiniteGroup::cyclic(3)), integer_algebra(12, FiniteGroup::cyclic(2))}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(alg, rng), b = random_element(alg, rng);
      const auto pa = alg.crt_project(a), pb = alg.crt_project(b);
      const auto psum = alg.crt_project(alg.add(a, b)), pprod = alg.crt_project(alg.mul(a, b));
      for (std::size_t j = 0; j < pa.size(); ++j) {
        const auto cj = alg.component_algebra(j);
        CHECK(psum[j] == cj.add(pa[j], pb[j]));
        CHECK(pprod[j] == cj.mul(pa[j], pb[j]));
      }
    }
  }
}

TEST_CASE("shifts are products with basis elements") {
  const auto alg = integer_algebra(3, FiniteGroup::dihedral(3));
  std::mt19937_64 rng(8);
  const auto a = random_element(alg, rng);
  for (std::size_t g = 0; g < alg.dimension(); ++g) {
    CHECK(alg.left_shift(g, a) == alg.mul(alg.basis(g), a));
    CHECK(alg.right_shift(a, g) == alg.mul(a, alg.basis(g)));
  }
}
