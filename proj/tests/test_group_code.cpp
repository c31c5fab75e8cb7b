/**************************************************************************
 * test_group_code.cpp
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

#include "lcp/errors.hpp"
#include "lcp/group_code.hpp"
#include "oracle.hpp"

using namespace lcp;

namespace {

AlgebraPtr make_algebra(std::uint64_t m, const FiniteGroup& g) {
  return std::make_shared<const GroupAlgebra>(ProductRingSpec::from_modulus(m), g);
}

AlgebraElement ints(const GroupAlgebra& alg, std::initializer_list<std::int64_t> xs) {
  AlgebraElement a;
  for (auto x : xs) a.coeffs.push_back(alg.ring().project(x));
  return a;
}

GroupCode gen(const AlgebraPtr& alg, std::initializer_list<std::int64_t> xs) {
  return code_from_generators(alg, {ints(*alg, xs)});
}

oracle::WordSet words(const GroupAlgebra& alg, std::initializer_list<std::initializer_list<std::int64_t>> ws) {
  oracle::WordSet out;
  for (const auto& w : ws) out.insert(oracle::to_word(alg, ints(alg, w)));
  return out;
}

struct F2C3 {
  AlgebraPtr alg = make_algebra(2, FiniteGroup::cyclic(3));
  GroupCode c = gen(alg, {1, 1, 0});
  GroupCode d = gen(alg, {1, 1, 1});
  GroupCode zero = zero_code(alg);
  GroupCode full = full_code(alg);
};

}  // namespace

TEST_CASE("construction from generators") {
  F2C3 x;
  CHECK(x.c.cardinality() == 4);
  CHECK(oracle::words_of(x.c) == words(*x.alg, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(x.full.cardinality() == 8);
  CHECK(x.full.is_full());
  CHECK(x.zero.cardinality() == 1);
  CHECK(x.zero.is_zero());
  CHECK(is_two_sided_ideal(x.c));
  CHECK(x.c.contains(ints(*x.alg, {0, 1, 1})));
  CHECK_FALSE(x.c.contains(ints(*x.alg, {1, 0, 0})));
}

TEST_CASE("sum, intersection and dual examples") {
  F2C3 x;
  CHECK(code_sum(x.c, x.d) == x.full);
  CHECK(code_sum(x.c, x.zero) == x.c);
  CHECK(code_sum(x.c, x.c) == x.c);
  CHECK(code_intersect(x.c, x.d) == x.zero);
  CHECK(code_intersect(x.c, x.c) == x.c);
  CHECK(code_intersect(x.c, x.full) == x.c);
  CHECK(code_dual(x.d) == x.c);
  CHECK(code_dual(x.full) == x.zero);
  CHECK(code_dual(x.zero) == x.full);
}

TEST_CASE("algebra mismatch is rejected") {
  F2C3 x;
  const auto other = make_algebra(3, FiniteGroup::cyclic(3));
  CHECK_THROWS_AS(code_sum(x.c, full_code(other)), AlgebraMismatchError);
  CHECK_THROWS_AS(lcp_check(x.c, full_code(other)), AlgebraMismatchError);
  // Equal algebras built separately are compatible.
  const auto twin = make_algebra(2, FiniteGroup::cyclic(3));
  CHECK(code_sum(x.c, gen(twin, {1, 1, 1})) == x.full);
}

TEST_CASE("cardinalities over Z6[C2]") {
  const auto alg = make_algebra(6, FiniteGroup::cyclic(2));
  const auto a0 = std::make_shared<const GroupAlgebra>(alg->component_algebra(0));
  const auto a1 = std::make_shared<const GroupAlgebra>(alg->component_algebra(1));
  const auto c = code_crt_combine({full_code(a0), gen(a1, {1, 1})});
  CHECK(c.cardinality() == 12);
  CHECK(oracle::words_of(c).size() == 12);
  CHECK(zero_code(alg).cardinality() == 1);
  CHECK(full_code(alg).cardinality() == 36);
}

TEST_CASE("Chinese products") {
  const auto alg = make_algebra(6, FiniteGroup::cyclic(3));
  const auto a0 = std::make_shared<const GroupAlgebra>(alg->component_algebra(0));
  const auto a1 = std::make_shared<const GroupAlgebra>(alg->component_algebra(1));
  CHECK(code_crt_combine({zero_code(a0), zero_code(a1)}) == zero_code(alg));
  CHECK(code_crt_combine({full_code(a0), full_code(a1)}) == full_code(alg));

  const auto p0 = gen(a0, {1, 1, 0});
  const auto p1 = gen(a1, {1, 1, 1});
  const auto c = code_crt_combine({p0, p1});
  CHECK(c.cardinality() == 12);
  CHECK(is_two_sided_ideal(c));
  const auto parts = code_crt_project(c);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == p0);
  CHECK(parts[1] == p1);
  // Brute force via the projection map on codewords.
  oracle::WordSet proj0, proj1;
  for (const auto& a : enumerate_code(c)) {
    const auto ps = alg->crt_project(a);
    proj0.insert(oracle::to_word(*a0, ps[0]));
    proj1.insert(oracle::to_word(*a1, ps[1]));
  }
  CHECK(proj0 == oracle::words_of(p0));
  CHECK(proj1 == oracle::words_of(p1));
  CHECK(oracle::words_of(c).size() == 12);

  CHECK_THROWS_AS(code_crt_combine({p0, gen(std::make_shared<const GroupAlgebra>(ProductRingSpec::from_modulus(3),
                                                                                   FiniteGroup::cyclic(2)),
                                            {1, 1})}),
                  AlgebraMismatchError);
}

TEST_CASE("LCP decisions") {
  F2C3 x;
  const auto r = lcp_check(x.c, x.d);
  CHECK(r.is_lcp);
  CHECK(r.paths_agree());
  CHECK(r.intersection_size == 1);
  CHECK(r.sum_is_full);
  REQUIRE(r.security);
  CHECK(r.security->value == 2);
  CHECK(r.security->d_c.value == 2);
  CHECK(r.security->d_d_dual.value == 2);

  const auto same = lcp_check(x.c, x.c);
  CHECK_FALSE(same.is_lcp);
  CHECK(same.paths_agree());
  CHECK_FALSE(same.security);

  const auto trivial = lcp_check(x.full, x.zero);
  CHECK(trivial.is_lcp);
  CHECK(trivial.security->value == 1);
}

TEST_CASE("distances") {
  F2C3 x;
  CHECK(min_distance(x.c).value == 2);
  CHECK(weight_enumerator(x.c) == std::vector<std::uint64_t>{1, 0, 3, 0});
  CHECK(min_distance(x.d).value == 3);
  const auto z = min_distance(x.zero);
  CHECK(z.zero_code);
  CHECK(z.value == 4);
  const auto f2c2 = make_algebra(2, FiniteGroup::cyclic(2));
  CHECK(min_distance(full_code(f2c2)).value == 1);
  CHECK_THROWS_AS(min_distance(x.full, 7), EnumerationTooLargeError);
}

TEST_CASE("security parameter") {
  F2C3 x;
  const auto sp = security_parameter(x.c, x.d);
  CHECK(sp.value == 2);
  CHECK(sp.distances_agree);
  CHECK(security_parameter(x.full, x.zero).value == 1);
  CHECK_THROWS_AS(security_parameter(x.c, x.c), NotLcpError);

  const auto alg = make_algebra(6, FiniteGroup::cyclic(2));
  const auto a0 = std::make_shared<const GroupAlgebra>(alg->component_algebra(0));
  const auto a1 = std::make_shared<const GroupAlgebra>(alg->component_algebra(1));
  const auto c = code_crt_combine({full_code(a0), gen(a1, {1, 1})});
  const auto d = code_crt_combine({zero_code(a0), gen(a1, {1, -1})});
  const auto s = security_parameter(c, d);
  const auto t = oracle::Tables::of(alg->ring());
  const auto d_set = oracle::words_of(d);
  const std::vector<oracle::Word> d_words(d_set.begin(), d_set.end());
  const auto d_dual = oracle::orthogonal(t, d_words, 2);
  CHECK(s.d_c.value == oracle::min_weight(oracle::words_of(c), 2));
  CHECK(s.d_d_dual.value == oracle::min_weight(d_dual, 2));
  CHECK(s.distances_agree);
}

TEST_CASE("direct sum masking split") {
  F2C3 x;
  const auto [c, d] = dsm_split(ints(*x.alg, {1, 0, 0}), x.c, x.d);
  CHECK(c == ints(*x.alg, {0, 1, 1}));
  CHECK(d == ints(*x.alg, {1, 1, 1}));
  const auto [c0, d0] = dsm_split(x.alg->zero(), x.c, x.d);
  CHECK(c0 == x.alg->zero());
  CHECK(d0 == x.alg->zero());
  const auto z = ints(*x.alg, {1, 0, 1});
  const auto [c1, d1] = dsm_split(z, x.c, x.d);
  CHECK(c1 == z);
  CHECK(d1 == x.alg->zero());
  CHECK_THROWS_AS(dsm_split(z, x.c, x.c), NotLcpError);
}

TEST_CASE("ideal enumeration examples") {
  const auto f2c2 = make_algebra(2, FiniteGroup::cyclic(2));
  const auto ideals = enumerate_ideals(f2c2);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0].is_zero());
  CHECK(ideals[1] == gen(f2c2, {1, 1}));
  CHECK(ideals[2].is_full());

  F2C3 x;
  const auto four = enumerate_ideals(x.alg);
  REQUIRE(four.size() == 4);
  CHECK(four[0] == x.zero);
  CHECK(four[1] == x.d);
  CHECK(four[2] == x.c);
  CHECK(four[3] == x.full);

  const auto big = make_algebra(6, FiniteGroup::cyclic(5));
  CHECK_THROWS_AS(enumerate_ideals(big, 4096), EnumerationTooLargeError);
}

TEST_CASE("ideal enumeration matches the closure oracle") {
  const std::vector<AlgebraPtr> algebras{
      make_algebra(2, FiniteGroup::cyclic(3)), make_algebra(3, FiniteGroup::cyclic(2)),
      make_algebra(4, FiniteGroup::cyclic(2)), make_algebra(6, FiniteGroup::cyclic(2)),
      make_algebra(2, FiniteGroup::symmetric(3)), make_algebra(2, FiniteGroup::cyclic(4))};
  for (const auto& alg : algebras) {
    CAPTURE(alg->describe());
    const auto t = oracle::Tables::of(alg->ring());
    const auto expected = oracle::all_ideals(t, alg->group());
    std::set<oracle::WordSet> got;
    for (const auto& c : enumerate_ideals(alg)) {
      CHECK(is_two_sided_ideal(c));
      got.insert(oracle::words_of(c));
    }
    CHECK(got == std::set<oracle::WordSet>(expected.begin(), expected.end()));
  }
}

TEST_CASE("one-sided submodules are detected") {
  const auto alg = make_algebra(2, FiniteGroup::symmetric(3));
  // span of 1 + (first transposition) is not closed under both shifts
  const auto left = code_from_components(
      alg, {pivot_reduce(RingMatrix{alg->ring().component(0), 6, {alg->component_vector(ints(*alg, {1, 1, 0, 0, 0, 0}), 0)}})});
  CHECK_FALSE(is_two_sided_ideal(left));
  CHECK(is_two_sided_ideal(gen(alg, {1, 1, 0, 0, 0, 0})));
}

TEST_CASE("corpus identities against brute force") {
  for (const auto& alg : {make_algebra(6, FiniteGroup::cyclic(2)), make_algebra(6, FiniteGroup::cyclic(3)),
                          make_algebra(4, FiniteGroup::cyclic(2))}) {
    CAPTURE(alg->describe());
    const auto t = oracle::Tables::of(alg->ring());
    const auto ideals = enumerate_ideals(alg);
    std::vector<oracle::WordSet> sets;
    for (const auto& c : ideals) sets.push_back(oracle::words_of(c));
    const std::size_t n = alg->dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= alg->ring().size();

    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const auto& c = ideals[i];
      const auto dual = code_dual(c);
      const std::vector<oracle::Word> gens(sets[i].begin(), sets[i].end());
      CHECK(oracle::words_of(dual) == oracle::orthogonal(t, gens, n));
      CHECK(c.cardinality() * dual.cardinality() == total);
      CHECK(code_dual(dual) == c);
      CHECK(is_two_sided_ideal(dual));
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        const auto& d = ideals[k];
        const auto inter = code_intersect(c, d);
        const auto sum = code_sum(c, d);
        CHECK(oracle::words_of(inter) == oracle::set_intersect(sets[i], sets[k]));
        CHECK(oracle::words_of(sum) == oracle::set_sum(t, sets[i], sets[k]));
        const auto r = lcp_check(c, d, false);
        const bool brute = oracle::set_intersect(sets[i], sets[k]).size() == 1 &&
                           oracle::set_sum(t, sets[i], sets[k]).size() == total;
        CHECK(r.is_lcp == brute);
        CHECK(r.paths_agree());
      }
    }
  }
}
