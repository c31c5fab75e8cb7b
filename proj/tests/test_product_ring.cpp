/**************************************************************************
 * test_product_ring.cpp
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
#include "lcp/product_ring.hpp"

using lcp::ChainRingElement;
using lcp::ChainRingSpec;
using lcp::ProductRingElement;
using lcp::ProductRingSpec;

namespace {

ProductRingElement tup(std::initializer_list<std::uint64_t> xs) {
  ProductRingElement t;
  for (auto x : xs) t.parts.push_back(ChainRingElement{{x}});
  return t;
}

}  // namespace

TEST_CASE("factoring an integer modulus") {
  const auto z6 = ProductRingSpec::from_modulus(6);
  REQUIRE(z6.arity() == 2);
  CHECK(z6.component(0).p() == 2);
  CHECK(z6.component(1).p() == 3);
  const auto z12 = ProductRingSpec::from_modulus(12);
  CHECK(z12.component(0).characteristic() == 4);
  CHECK(z12.component(1).characteristic() == 3);
  CHECK(z12.integer_modulus() == 12);
  CHECK(z12.size() == 12);
  CHECK_THROWS_AS(ProductRingSpec::from_modulus(1), lcp::InvalidRingError);
}

TEST_CASE("projection and lift") {
  const auto z6 = ProductRingSpec::from_modulus(6);
  const auto z12 = ProductRingSpec::from_modulus(12);
  CHECK(z6.project(5) == tup({1, 2}));
  CHECK(z6.project(0) == tup({0, 0}));
  CHECK(z12.project(7) == tup({3, 1}));
  CHECK(z6.lift(tup({1, 2})) == 5);
  CHECK(z6.lift(tup({0, 0})) == 0);
  CHECK(z12.lift(tup({3, 1})) == 7);
  CHECK(z6.project(-1) == tup({1, 2}));
}

TEST_CASE("projection needs an integer ring") {
  const ProductRingSpec f2f4({ChainRingSpec(2, 1, 1), ChainRingSpec(2, 1, 2)});
  CHECK_THROWS_AS(f2f4.project(1), lcp::UnsupportedProjectionError);
  const ProductRingSpec f2f2({ChainRingSpec(2, 1, 1), ChainRingSpec(2, 1, 1)});
  CHECK_FALSE(f2f2.is_integer_ring());
  CHECK_THROWS_AS(f2f2.lift(f2f2.one()), lcp::UnsupportedProjectionError);
}

TEST_CASE("componentwise operations") {
  const auto z6 = ProductRingSpec::from_modulus(6);
  CHECK(z6.mul(tup({1, 2}), tup({1, 2})) == tup({1, 1}));
  CHECK(z6.add(tup({0, 1}), tup({1, 0})) == tup({1, 1}));
  CHECK_FALSE(z6.is_unit(tup({1, 0})));
  CHECK(z6.is_unit(tup({1, 2})));
  CHECK_THROWS_AS(z6.add(tup({1}), tup({1, 0})), lcp::MalformedElementError);
  CHECK(z6.format(tup({3 % 2, 1})) == "(1, 1)");
}

TEST_CASE("projection is a ring homomorphism on random integers") {
  std::mt19937_64 rng(7);
  for (std::uint64_t m : {6, 12, 36}) {
    const auto ring = ProductRingSpec::from_modulus(m);
    std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(m) - 1);
    for (int i = 0; i < 200; ++i) {
      const std::int64_t a = pick(rng), b = pick(rng);
      CHECK(ring.project((a * b) % static_cast<std::int64_t>(m)) == ring.mul(ring.project(a), ring.project(b)));
      CHECK(ring.project((a + b) % static_cast<std::int64_t>(m)) == ring.add(ring.project(a), ring.project(b)));
      CHECK(ring.lift(ring.project(a)) == static_cast<std::uint64_t>(a));
    }
  }
}

TEST_CASE("element indexing round trips") {
  const ProductRingSpec ring({ChainRingSpec(2, 1, 1), ChainRingSpec(2, 1, 2), ChainRingSpec(3, 1, 1)});
  CHECK(ring.size() == 24);
  for (std::uint64_t i = 0; i < ring.size(); ++i) CHECK(ring.index_of(ring.element_at(i)) == i);
  CHECK(ring.index_of(ring.zero()) == 0);
}
