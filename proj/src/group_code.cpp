/**************************************************************************
 * group_code.cpp
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

#include "lcp/group_code.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

void check_same_algebra(const GroupCode& c, const GroupCode& d) {
  if (!(c.algebra_ptr() == d.algebra_ptr() || c.algebra() == d.algebra())) {
    throw AlgebraMismatchError("codes live in different group algebras");
  }
}

std::vector<AlgebraElement> lift_component_rows(const GroupAlgebra& algebra, const std::vector<PivotForm>& forms) {
  std::vector<AlgebraElement> gens;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    for (const auto& row : forms[j].rows) {
      std::vector<RingVector> parts;
      for (std::size_t k = 0; k < forms.size(); ++k) {
        parts.push_back(k == j ? row : RingVector(algebra.dimension(), algebra.ring().component(k).zero()));
      }
      gens.push_back(algebra.from_component_vectors(parts));
    }
  }
  return gens;
}

BigInt component_space_size(const GroupAlgebra& algebra, std::size_t j) {
  BigInt total = 1;
  for (std::size_t i = 0; i < algebra.dimension(); ++i) total *= algebra.ring().component(j).size();
  return total;
}

bool component_pair_is_lcp(const GroupAlgebra& algebra, std::size_t j, const PivotForm& c, const PivotForm& d) {
  return intersect_forms(c, d).empty() && cardinality(c) * cardinality(d) == component_space_size(algebra, j);
}

void check_cap(const GroupCode& c, std::uint64_t cap) {
  const BigInt size = c.cardinality();
  if (size > cap) {
    throw EnumerationTooLargeError("code of size " + size.str() + " exceeds the enumeration cap " +
                                   std::to_string(cap));
  }
}

// Per-component codewords as product-ring index contributions, so that the
// symbol of a combined codeword is the sum over components.
std::vector<std::vector<std::vector<std::uint64_t>>> component_symbols(const GroupCode& c, std::uint64_t cap) {
  const ProductRingSpec& ring = c.algebra().ring();
  std::vector<std::vector<std::vector<std::uint64_t>>> out;
  std::uint64_t stride = 1;
  for (std::size_t j = 0; j < ring.arity(); ++j) {
    const ChainRingSpec& cr = ring.component(j);
    std::vector<std::vector<std::uint64_t>> words;
    CodewordEnumerator it(c.component(j), cap);
    RingVector w;
    while (it.next(w)) {
      std::vector<std::uint64_t> sym(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) sym[i] = cr.index_of(w[i]) * stride;
      words.push_back(std::move(sym));
    }
    out.push_back(std::move(words));
    stride *= cr.size();
  }
  return out;
}

// Visits every tuple (w_0, ..., w_{s-1}) with component 0 slowest.
template <typename Fn>
void for_each_tuple(const std::vector<std::size_t>& counts, Fn&& fn) {
  std::vector<std::size_t> idx(counts.size(), 0);
  while (true) {
    fn(idx);
    std::size_t j = counts.size();
    while (j > 0) {
      --j;
      if (++idx[j] < counts[j]) break;
      idx[j] = 0;
      if (j == 0) return;
    }
    if (counts.empty()) return;
  }
}

using Support = std::vector<std::uint64_t>;

std::vector<std::vector<Support>> component_supports(const GroupCode& c, std::uint64_t cap) {
  const ProductRingSpec& ring = c.algebra().ring();
  const std::size_t words = (c.length() + 63) / 64;
  std::vector<std::vector<Support>> out;
  for (std::size_t j = 0; j < ring.arity(); ++j) {
    const ChainRingSpec& cr = ring.component(j);
    std::vector<Support> supports;
    CodewordEnumerator it(c.component(j), cap);
    RingVector w;
    while (it.next(w)) {
      Support s(words, 0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!cr.is_zero(w[i])) s[i / 64] |= std::uint64_t{1} << (i % 64);
      }
      supports.push_back(std::move(s));
    }
    out.push_back(std::move(supports));
  }
  return out;
}

}  // namespace

GroupCode::GroupCode(AlgebraPtr algebra, std::vector<AlgebraElement> generators, std::vector<PivotForm> components)
    : algebra_(std::move(algebra)), generators_(std::move(generators)), components_(std::move(components)) {
  if (!algebra_) throw ValidationError("group code without an algebra");
  const ProductRingSpec& ring = algebra_->ring();
  if (components_.size() != ring.arity()) throw AlgebraMismatchError("component count differs from ring arity");
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (!(components_[j].ring == ring.component(j)) || components_[j].cols != algebra_->dimension()) {
      throw AlgebraMismatchError("component " + std::to_string(j) + " does not match the algebra");
    }
  }
}

BigInt GroupCode::cardinality() const {
  BigInt total = 1;
  for (const auto& f : components_) total *= lcp::cardinality(f);
  return total;
}

bool GroupCode::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const PivotForm& f) { return f.empty(); });
}

bool GroupCode::is_full() const { return cardinality() == algebra_->size(); }

bool GroupCode::contains(const AlgebraElement& a) const {
  algebra_->validate(a);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (!membership(algebra_->component_vector(a, j), components_[j])) return false;
  }
  return true;
}

std::string GroupCode::canonical_form() const {
  std::string out;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j > 0) out += " x ";
    out += format_form(components_[j]);
  }
  return out;
}

GroupCode code_from_generators(const AlgebraPtr& algebra, std::vector<AlgebraElement> gens) {
  const GroupAlgebra& alg = *algebra;
  const std::size_t n = alg.dimension();
  const std::size_t s = alg.ring().arity();
  std::vector<std::set<RingVector>> rows(s);
  for (const auto& a : gens) {
    alg.validate(a);
    for (std::size_t h = 0; h < n; ++h) {
      const AlgebraElement ah = alg.right_shift(a, h);
      for (std::size_t g = 0; g < n; ++g) {
        const AlgebraElement gah = alg.left_shift(g, ah);
        for (std::size_t j = 0; j < s; ++j) rows[j].insert(alg.component_vector(gah, j));
      }
    }
  }
  std::vector<PivotForm> forms;
  for (std::size_t j = 0; j < s; ++j) {
    forms.push_back(pivot_reduce(RingMatrix{alg.ring().component(j), n, {rows[j].begin(), rows[j].end()}}));
  }
  return GroupCode(algebra, std::move(gens), std::move(forms));
}

GroupCode code_from_components(const AlgebraPtr& algebra, std::vector<PivotForm> components) {
  if (components.size() != algebra->ring().arity()) throw AlgebraMismatchError("component count differs from ring arity");
  auto gens = lift_component_rows(*algebra, components);
  return GroupCode(algebra, std::move(gens), std::move(components));
}

GroupCode zero_code(const AlgebraPtr& algebra) { return code_from_generators(algebra, {}); }

GroupCode full_code(const AlgebraPtr& algebra) { return code_from_generators(algebra, {algebra->one()}); }

GroupCode code_sum(const GroupCode& c, const GroupCode& d) {
  check_same_algebra(c, d);
  std::vector<PivotForm> forms;
  for (std::size_t j = 0; j < c.components().size(); ++j) forms.push_back(sum_forms(c.component(j), d.component(j)));
  std::vector<AlgebraElement> gens = c.generators();
  gens.insert(gens.end(), d.generators().begin(), d.generators().end());
  return GroupCode(c.algebra_ptr(), std::move(gens), std::move(forms));
}

GroupCode code_intersect(const GroupCode& c, const GroupCode& d) {
  check_same_algebra(c, d);
  std::vector<PivotForm> forms;
  for (std::size_t j = 0; j < c.components().size(); ++j) {
    forms.push_back(intersect_forms(c.component(j), d.component(j)));
#ifndef NDEBUG
    for (const auto& row : forms.back().rows) {
      assert(membership(row, c.component(j)) && membership(row, d.component(j)));
    }
#endif
  }
  return code_from_components(c.algebra_ptr(), std::move(forms));
}

GroupCode code_dual(const GroupCode& c) {
  std::vector<PivotForm> forms;
  for (const auto& f : c.components()) forms.push_back(dual_form(f));
  return code_from_components(c.algebra_ptr(), std::move(forms));
}

std::vector<GroupCode> code_crt_project(const GroupCode& c) {
  std::vector<GroupCode> parts;
  const GroupAlgebra& alg = c.algebra();
  for (std::size_t j = 0; j < alg.ring().arity(); ++j) {
    auto part_alg = std::make_shared<const GroupAlgebra>(alg.component_algebra(j));
    parts.push_back(code_from_components(part_alg, {c.component(j)}));
  }
  return parts;
}

GroupCode code_crt_combine(const std::vector<GroupCode>& parts) {
  if (parts.empty()) throw AlgebraMismatchError("nothing to combine");
  std::vector<ChainRingSpec> rings;
  std::vector<PivotForm> forms;
  const FiniteGroup& group = parts.front().algebra().group();
  for (const auto& p : parts) {
    if (p.algebra().ring().arity() != 1) throw AlgebraMismatchError("combine expects codes over chain-ring algebras");
    if (!(p.algebra().group() == group)) throw AlgebraMismatchError("combine expects a common group");
    rings.push_back(p.algebra().ring().component(0));
    forms.push_back(p.component(0));
  }
  auto algebra = std::make_shared<const GroupAlgebra>(ProductRingSpec(std::move(rings)), group);
  std::vector<AlgebraElement> gens;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (const auto& g : parts[j].generators()) {
      std::vector<AlgebraElement> slots;
      for (std::size_t k = 0; k < parts.size(); ++k) slots.push_back(k == j ? g : parts[k].algebra().zero());
      gens.push_back(algebra->crt_lift(slots));
    }
  }
  return GroupCode(algebra, std::move(gens), std::move(forms));
}

bool is_two_sided_ideal(const GroupCode& c) {
  const GroupAlgebra& alg = c.algebra();
  const FiniteGroup& g = alg.group();
  const std::size_t n = alg.dimension();
  for (const auto& form : c.components()) {
    for (const auto& row : form.rows) {
      for (std::size_t h = 0; h < n; ++h) {
        RingVector left(n, form.ring.zero()), right(n, form.ring.zero());
        for (std::size_t i = 0; i < n; ++i) {
          left[g.op(h, i)] = row[i];
          right[g.op(i, h)] = row[i];
        }
        if (!membership(left, form) || !membership(right, form)) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> codeword_symbols(const GroupCode& c, std::uint64_t cap) {
  check_cap(c, cap);
  const auto parts = component_symbols(c, cap);
  std::vector<std::size_t> counts;
  for (const auto& p : parts) counts.push_back(p.size());
  std::vector<std::vector<std::uint64_t>> out;
  for_each_tuple(counts, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::uint64_t> sym(c.length(), 0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto& w = parts[j][idx[j]];
      for (std::size_t i = 0; i < sym.size(); ++i) sym[i] += w[i];
    }
    out.push_back(std::move(sym));
  });
  return out;
}

std::vector<AlgebraElement> enumerate_code(const GroupCode& c, std::uint64_t cap) {
  const GroupAlgebra& alg = c.algebra();
  std::vector<AlgebraElement> out;
  for (const auto& sym : codeword_symbols(c, cap)) {
    AlgebraElement a;
    for (std::uint64_t x : sym) a.coeffs.push_back(alg.ring().element_at(x));
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::uint64_t> weight_enumerator(const GroupCode& c, std::uint64_t cap) {
  check_cap(c, cap);
  const auto parts = component_supports(c, cap);
  std::vector<std::size_t> counts;
  for (const auto& p : parts) counts.push_back(p.size());
  std::vector<std::uint64_t> hist(c.length() + 1, 0);
  const std::size_t words = (c.length() + 63) / 64;
  Support acc(words);
  for_each_tuple(counts, [&](const std::vector<std::size_t>& idx) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Support& s = parts[j][idx[j]];
      for (std::size_t k = 0; k < words; ++k) acc[k] |= s[k];
    }
    std::size_t w = 0;
    for (std::uint64_t x : acc) w += static_cast<std::size_t>(std::popcount(x));
    ++hist[w];
  });
  return hist;
}

MinDistance min_distance(const GroupCode& c, std::uint64_t cap) {
  if (c.is_zero()) return MinDistance{c.length() + 1, true};
  const auto hist = weight_enumerator(c, cap);
  for (std::size_t w = 1; w < hist.size(); ++w) {
    if (hist[w] > 0) return MinDistance{w, false};
  }
  return MinDistance{c.length() + 1, true};  // unreachable for a nonzero code
}

LcpReport lcp_check(const GroupCode& c, const GroupCode& d, bool with_security, std::uint64_t cap) {
  check_same_algebra(c, d);
  const GroupAlgebra& alg = c.algebra();
  LcpReport report;
  report.intersection_size = code_intersect(c, d).cardinality();
  report.sum_size = code_sum(c, d).cardinality();
  report.sum_is_full = report.sum_size == alg.size();
  report.direct_verdict = report.intersection_size == 1 && report.sum_is_full;

  report.componentwise_verdict = true;
  for (std::size_t j = 0; j < alg.ring().arity(); ++j) {
    const bool ok = component_pair_is_lcp(alg, j, c.component(j), d.component(j));
    report.component_verdicts.push_back(ok);
    report.componentwise_verdict = report.componentwise_verdict && ok;
  }
  report.is_lcp = report.direct_verdict;
  if (report.is_lcp && with_security) report.security = security_parameter(c, d, cap);
  return report;
}

SecurityParameter security_parameter(const GroupCode& c, const GroupCode& d, std::uint64_t cap) {
  check_same_algebra(c, d);
  if (!lcp_check(c, d, false).is_lcp) throw NotLcpError("security parameter needs an LCP pair");
  SecurityParameter sp;
  sp.d_c = min_distance(c, cap);
  sp.d_d_dual = min_distance(code_dual(d), cap);
  sp.value = std::min(sp.d_c.value, sp.d_d_dual.value);
  sp.distances_agree = sp.d_c.value == sp.d_d_dual.value;
  return sp;
}

std::pair<AlgebraElement, AlgebraElement> dsm_split(const AlgebraElement& z, const GroupCode& c, const GroupCode& d) {
  check_same_algebra(c, d);
  const GroupAlgebra& alg = c.algebra();
  alg.validate(z);
  if (!lcp_check(c, d, false).is_lcp) throw NotLcpError("direct sum masking needs an LCP pair");
  const std::size_t n = alg.dimension();
  std::vector<RingVector> c_parts, d_parts;
  for (std::size_t j = 0; j < alg.ring().arity(); ++j) {
    const ChainRingSpec& ring = alg.ring().component(j);
    // Rows (x, x) for x in C_j and (y, 0) for y in D_j span {(x + y, x)}.
    RingMatrix stacked{ring, 2 * n, {}};
    for (const auto& row : c.component(j).rows) {
      RingVector r = row;
      r.insert(r.end(), row.begin(), row.end());
      stacked.rows.push_back(std::move(r));
    }
    for (const auto& row : d.component(j).rows) {
      RingVector r = row;
      r.resize(2 * n, ring.zero());
      stacked.rows.push_back(std::move(r));
    }
    const PivotForm form = pivot_reduce(stacked);
    RingVector target = alg.component_vector(z, j);
    target.resize(2 * n, ring.zero());
    const auto residual = reduce_vector(target, form, n);
    if (!residual) throw NotLcpError("direct sum decomposition failed");
    // residual = (z, 0) - (z, x) = (0, -x)
    RingVector x(residual->begin() + static_cast<std::ptrdiff_t>(n), residual->end());
    for (auto& v : x) v = ring.neg(v);
    RingVector y = alg.component_vector(z, j);
    for (std::size_t i = 0; i < n; ++i) y[i] = ring.sub(y[i], x[i]);
    c_parts.push_back(std::move(x));
    d_parts.push_back(std::move(y));
  }
  return {alg.from_component_vectors(c_parts), alg.from_component_vectors(d_parts)};
}

std::vector<GroupCode> enumerate_ideals(const AlgebraPtr& algebra, std::uint64_t max_algebra_size) {
  const BigInt total = algebra->size();
  if (total > max_algebra_size) {
    throw EnumerationTooLargeError("algebra of size " + total.str() + " exceeds the ideal search cap " +
                                   std::to_string(max_algebra_size));
  }
  std::map<std::string, GroupCode> found;
  std::vector<std::string> order;
  auto insert = [&](GroupCode code) {
    std::string key = code.canonical_form();
    if (found.count(key)) return false;
    order.push_back(key);
    found.emplace(std::move(key), std::move(code));
    return true;
  };
  const auto count = static_cast<std::uint64_t>(total);
  for (std::uint64_t i = 0; i < count; ++i) insert(code_from_generators(algebra, {algebra->element_at(i)}));

  // Close under sums; each new ideal is summed against everything known.
  for (std::size_t next = 0; next < order.size(); ++next) {
    for (std::size_t k = 0; k < next; ++k) {
      insert(code_sum(found.at(order[next]), found.at(order[k])));
    }
  }

  std::vector<GroupCode> ideals;
  for (const auto& key : order) ideals.push_back(found.at(key));
  std::sort(ideals.begin(), ideals.end(), [](const GroupCode& a, const GroupCode& b) {
    const BigInt sa = a.cardinality(), sb = b.cardinality();
    if (sa != sb) return sa < sb;
    return a.canonical_form() < b.canonical_form();
  });
  return ideals;
}

}  // namespace lcp
