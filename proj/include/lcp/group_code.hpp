/**************************************************************************
 * group_code.hpp
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

// Group codes: two-sided ideals of R[G] for R = R_1 x ... x R_s.
//
// Every code is stored through its CRT components: component j is the pivot
// form of the ideal's image in R_j[G], in group-index coordinates. All
// operations project, work per component, and recombine.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcp/chain_linalg.hpp"
#include "lcp/group_algebra.hpp"

namespace lcp {

using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

class GroupCode {
 public:
  /// components[j] must be a pivot form over R_j with n columns.
  GroupCode(AlgebraPtr algebra, std::vector<AlgebraElement> generators, std::vector<PivotForm> components);

  const GroupAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const std::vector<AlgebraElement>& generators() const noexcept { return generators_; }
  const std::vector<PivotForm>& components() const noexcept { return components_; }
  const PivotForm& component(std::size_t j) const { return components_.at(j); }
  std::size_t length() const noexcept { return algebra_->dimension(); }

  /// |C| = prod_j |C_j|
  BigInt cardinality() const;
  bool is_zero() const;
  bool is_full() const;
  bool contains(const AlgebraElement& a) const;

  /// Component pivot forms in component order; equal iff the codes are equal.
  std::string canonical_form() const;

  friend bool operator==(const GroupCode& a, const GroupCode& b) {
    return (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) && a.components_ == b.components_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<AlgebraElement> generators_;
  std::vector<PivotForm> components_;
};

/// The two-sided ideal generated by gens: per component, the span of all
/// g * a * h for a in gens and g, h in G. An empty list gives the zero code.
GroupCode code_from_generators(const AlgebraPtr& algebra, std::vector<AlgebraElement> gens);
/// Wraps per-component forms; generators are the CRT lifts of their rows.
GroupCode code_from_components(const AlgebraPtr& algebra, std::vector<PivotForm> components);
GroupCode zero_code(const AlgebraPtr& algebra);
GroupCode full_code(const AlgebraPtr& algebra);

GroupCode code_sum(const GroupCode& c, const GroupCode& d);
/// Per component (C_j^perp + D_j^perp)^perp.
GroupCode code_intersect(const GroupCode& c, const GroupCode& d);
/// Annihilator under sum_i x_i y_i in group-index coordinates.
GroupCode code_dual(const GroupCode& c);

/// Codes C_j over R_j[G], one per component.
std::vector<GroupCode> code_crt_project(const GroupCode& c);
/// The Chinese product of codes over chain-ring algebras R_1[G], ..., R_s[G]
/// sharing one group; the result lives in (R_1 x ... x R_s)[G].
GroupCode code_crt_combine(const std::vector<GroupCode>& parts);

/// Checks closure of every component under left and right multiplication
/// by each group element.
bool is_two_sided_ideal(const GroupCode& c);

/// Every codeword of the CRT-combined code; component 0 varies slowest.
std::vector<AlgebraElement> enumerate_code(const GroupCode& c, std::uint64_t cap = kDefaultEnumerationCap);
/// Same enumeration order, each coordinate replaced by its product-ring index.
std::vector<std::vector<std::uint64_t>> codeword_symbols(const GroupCode& c,
                                                         std::uint64_t cap = kDefaultEnumerationCap);

struct MinDistance {
  /// Minimum Hamming weight; n + 1 for the zero code.
  std::size_t value = 0;
  bool zero_code = false;

  friend bool operator==(const MinDistance&, const MinDistance&) = default;
};

/// A coordinate counts as nonzero when any component is nonzero there.
MinDistance min_distance(const GroupCode& c, std::uint64_t cap = kDefaultEnumerationCap);
/// Number of codewords of each weight 0..n.
std::vector<std::uint64_t> weight_enumerator(const GroupCode& c, std::uint64_t cap = kDefaultEnumerationCap);

struct SecurityParameter {
  MinDistance d_c;
  MinDistance d_d_dual;
  /// min(d(C), d(D^perp))
  std::size_t value = 0;
  bool distances_agree = false;
};

struct LcpReport {
  bool is_lcp = false;
  /// |C intersect D|
  BigInt intersection_size;
  BigInt sum_size;
  bool sum_is_full = false;
  /// Verdict from C intersect D and C + D computed on the combined codes.
  bool direct_verdict = false;
  /// (C_j, D_j) is LCP in R_j[G], per component.
  std::vector<bool> component_verdicts;
  bool componentwise_verdict = false;
  std::optional<SecurityParameter> security;

  bool paths_agree() const noexcept { return direct_verdict == componentwise_verdict; }
};

/// Decides whether C + D = R[G] with C intersect D = 0, both on the combined
/// codes and per component. With with_security set and the pair LCP, also
/// fills the security parameter (enumeration bounded by cap).
LcpReport lcp_check(const GroupCode& c, const GroupCode& d, bool with_security = true,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// min{d(C), d(D^perp)} for an LCP pair, reporting both distances.
/// Throws NotLcpError otherwise.
SecurityParameter security_parameter(const GroupCode& c, const GroupCode& d, std::uint64_t cap = kDefaultEnumerationCap);

/// The unique (c, d) in C x D with z = c + d. Throws NotLcpError unless the
/// pair is LCP.
std::pair<AlgebraElement, AlgebraElement> dsm_split(const AlgebraElement& z, const GroupCode& c, const GroupCode& d);

/// All two-sided ideals of the algebra: every principal ideal <a> for
/// a in R[G], closed under sums. Sorted by cardinality, then canonical form.
/// Throws EnumerationTooLargeError when |R[G]| > max_algebra_size.
std::vector<GroupCode> enumerate_ideals(const AlgebraPtr& algebra, std::uint64_t max_algebra_size = 4096);

}  // namespace lcp
