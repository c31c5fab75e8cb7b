/**************************************************************************
 * test_group.cpp
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

#include <algorithm>
#include <sstream>

#include "lcp/errors.hpp"
#include "lcp/group.hpp"

using lcp::FiniteGroup;
using lcp::GroupErrorKind;

namespace {

GroupErrorKind kind_of(const lcp::CayleyTable& t) {
  try {
    FiniteGroup::from_table(t);
  } catch (const lcp::GroupValidationError& e) {
    return e.kind();
  }
  FAIL("table was accepted");
  return GroupErrorKind::kShape;
}

bool associative(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) return false;
      }
    }
  }
  return true;
}

bool group_laws(const FiniteGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.op(0, i) != i || g.op(i, 0) != i) return false;
    if (g.op(i, g.inv(i)) != 0 || g.inv(g.inv(i)) != i) return false;
  }
  return associative(g);
}

}  // namespace

TEST_CASE("groups from tables") {
  const auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2 == FiniteGroup::cyclic(2));
  const auto c3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3.inverses() == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("identity is relabelled to index 0") {
  // x * y = x + y + 1 mod 3 has identity 2.
  lcp::CayleyTable t(3, std::vector<std::size_t>(3));
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) t[x][y] = (x + y + 1) % 3;
  }
  const auto g = FiniteGroup::from_table(t);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(g.op(0, j) == j);
    CHECK(g.op(j, 0) == j);
  }
  CHECK(group_laws(g));
}

TEST_CASE("each table defect has its own error kind") {
  CHECK(kind_of({{0, 1}, {1, 1}}) == GroupErrorKind::kLatinSquare);
  CHECK(kind_of({{0, 1}, {1}}) == GroupErrorKind::kShape);
  CHECK(kind_of({{0, 5}, {1, 0}}) == GroupErrorKind::kIndexRange);
  CHECK(kind_of({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}) == GroupErrorKind::kMissingIdentity);
  // A Latin square with identity in which every element squares to 0 at odd order.
  CHECK(kind_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}) ==
        GroupErrorKind::kAssociativity);
}

TEST_CASE("named families") {
  const auto c3 = FiniteGroup::cyclic(3);
  CHECK(c3.op(1, 2) == 0);
  CHECK(c3.inv(1) == 2);
  for (std::size_t j = 0; j < 3; ++j) CHECK(c3.op(0, j) == j);

  const auto d4 = FiniteGroup::dihedral(4);
  CHECK(d4.order() == 8);
  CHECK(d4.op(4, 1) == 7);
  CHECK_FALSE(d4.is_abelian());

  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  std::size_t involutions = 0;
  for (std::size_t i = 1; i < 6; ++i) involutions += s3.inv(i) == i ? 1 : 0;
  CHECK(involutions == 3);
  // [1,2,0] and [2,0,1] are the 3-cycles.
  CHECK(s3.inv(3) == 4);
  CHECK(s3.label(3) == "[1,2,0]");

  CHECK_THROWS_AS(FiniteGroup::symmetric(6), lcp::SizeLimitError);
  CHECK_THROWS_AS(FiniteGroup::cyclic(257), lcp::SizeLimitError);
  CHECK_THROWS_AS(FiniteGroup::direct_product(FiniteGroup::cyclic(20), FiniteGroup::cyclic(20)), lcp::SizeLimitError);
}

TEST_CASE("dihedral relation s r s^-1 = r^-1") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto d = FiniteGroup::dihedral(n);
    const std::size_t r = n > 1 ? 1 : 0, s = n;
    CHECK(d.op(d.op(s, r), d.inv(s)) == d.inv(r));
  }
}

TEST_CASE("constructed groups satisfy the group laws") {
  CHECK(group_laws(FiniteGroup::cyclic(1)));
  for (std::size_t n : {2, 5, 12, 64}) CHECK(group_laws(FiniteGroup::cyclic(n)));
  for (std::size_t n : {1, 2, 3, 4, 16, 32}) CHECK(group_laws(FiniteGroup::dihedral(n)));
  for (std::size_t m : {1, 2, 3, 4}) CHECK(group_laws(FiniteGroup::symmetric(m)));
  CHECK(group_laws(FiniteGroup::direct_product(FiniteGroup::dihedral(3), FiniteGroup::cyclic(4))));
  CHECK(FiniteGroup::symmetric(5).order() == 120);
}

TEST_CASE("C2 x C3 is cyclic of order 6") {
  const auto p = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  const auto c6 = FiniteGroup::cyclic(6);
  // k -> (1,1)^k, where (1,1) has index 1 * 3 + 1.
  std::vector<std::size_t> map(6);
  std::size_t x = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    map[k] = x;
    x = p.op(x, 4);
  }
  CHECK(x == 0);
  std::vector<bool> hit(6, false);
  for (auto m : map) hit[m] = true;
  CHECK(std::count(hit.begin(), hit.end(), true) == 6);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) CHECK(map[c6.op(a, b)] == p.op(map[a], map[b]));
  }
}

TEST_CASE("Cayley table files") {
  const auto d3 = FiniteGroup::dihedral(3);
  std::stringstream buf;
  lcp::write_cayley_table(buf, d3);
  CHECK(lcp::read_cayley_table(buf) == d3);

  std::istringstream bad("2\n0 1\n1\n");
  CHECK_THROWS_AS(lcp::read_cayley_table(bad), lcp::GroupValidationError);
  std::istringstream latin("2\n0 1\n0 1\n");
  CHECK_THROWS_AS(lcp::read_cayley_table(latin), lcp::GroupValidationError);
}

TEST_CASE("permutations") {
  const lcp::Permutation p{{2, 0, 1}};
  CHECK(p.to_string() == "[2,0,1]");
  CHECK(p.apply(std::vector<int>{10, 11, 12}) == std::vector<int>{11, 12, 10});
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS((lcp::Permutation{{0, 0, 1}}.validate()), lcp::ValidationError);
  CHECK(lcp::Permutation::identity(3).map == std::vector<std::size_t>{0, 1, 2});
}
