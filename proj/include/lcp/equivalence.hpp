/**************************************************************************
 * equivalence.hpp
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

// Permutation equivalence of group codes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcp/group.hpp"
#include "lcp/group_code.hpp"

namespace lcp {

enum class EquivalenceStatus { kFound, kNotEquivalent, kSearchExhausted };

/// "found", "not-equivalent" or "search-exhausted".
std::string to_string(EquivalenceStatus status);

struct SearchOptions {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Backtracking nodes visited before giving up.
  std::uint64_t node_limit = 2'000'000;
  std::size_t max_length = 16;
};

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::kSearchExhausted;
  std::optional<Permutation> permutation;
  /// Filled by check_dual_equivalence; zero otherwise.
  std::size_t d_c = 0;
  std::size_t d_d_dual = 0;
  bool distances_agree = false;
  /// Per-component outcome, one entry per CRT component.
  std::vector<EquivalenceStatus> component_statuses;
  std::vector<std::optional<Permutation>> component_permutations;
  /// Every component has a permutation but no single common one was found.
  bool componentwise_only = false;
  std::string block_note;
  /// Why the search stopped early, when it did.
  std::string diagnostics;
  std::uint64_t nodes_visited = 0;
};

/// True iff P maps C1 onto C2, i.e. C2 = { c P : c in C1 }. Checks that
/// every permuted pivot row of C1 lies in C2 and that |C1| = |C2|.
/// Throws LengthMismatchError when lengths differ.
bool verify_permutation(const GroupCode& c1, const GroupCode& c2, const Permutation& p);

/// Searches for the lexicographically least P with C2 = C1 P. Weight
/// enumerators and per-coordinate symbol histograms are compared first;
/// the search then fixes images of coordinates 0, 1, ... in increasing
/// order and prunes when the projections onto the fixed coordinates differ.
EquivalenceResult find_permutation(const GroupCode& c1, const GroupCode& c2, const SearchOptions& options = {});

/// For an LCP pair (C, D): d(C), d(D^perp), a permutation P with
/// C = D^perp P over the full ring, and one per CRT component.
/// Throws NotLcpError otherwise.
EquivalenceResult check_dual_equivalence(const GroupCode& c, const GroupCode& d, const SearchOptions& options = {});

}  // namespace lcp
