/**************************************************************************
 * equivalence.cpp
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

#include "lcp/equivalence.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

using Histogram = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// columns[i][w] = symbol of codeword w at coordinate i.
std::vector<std::vector<std::uint64_t>> columns_of(const GroupCode& c, std::uint64_t cap) {
  const auto words = codeword_symbols(c, cap);
  std::vector<std::vector<std::uint64_t>> cols(c.length(), std::vector<std::uint64_t>(words.size()));
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t i = 0; i < c.length(); ++i) cols[i][w] = words[w][i];
  }
  return cols;
}

Histogram histogram(const std::vector<std::uint64_t>& column) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s : column) ++counts[s];
  return {counts.begin(), counts.end()};
}

class Search {
 public:
  Search(std::vector<std::vector<std::uint64_t>> cols1, std::vector<std::vector<std::uint64_t>> cols2,
         std::vector<Histogram> sig1, std::vector<Histogram> sig2, const GroupCode& c1, const GroupCode& c2,
         std::uint64_t node_limit)
      : cols1_(std::move(cols1)),
        cols2_(std::move(cols2)),
        sig1_(std::move(sig1)),
        sig2_(std::move(sig2)),
        c1_(c1),
        c2_(c2),
        node_limit_(node_limit),
        n_(cols1_.size()),
        image_(n_),
        used_(n_, false) {}

  // 1 found, 0 exhausted the tree, -1 hit the node limit.
  int run() {
    const std::size_t words = n_ == 0 ? 1 : cols1_[0].size();
    return descend(0, std::vector<std::uint64_t>(words, 0), std::vector<std::uint64_t>(words, 0));
  }

  const std::vector<std::size_t>& image() const { return image_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int descend(std::size_t k, const std::vector<std::uint64_t>& h1, const std::vector<std::uint64_t>& h2) {
    if (k == n_) return verify_permutation(c1_, c2_, Permutation{image_}) ? 1 : 0;
    std::vector<std::uint64_t> next1(h1.size());
    for (std::size_t w = 0; w < h1.size(); ++w) next1[w] = mix(h1[w] + cols1_[k][w] + 1);
    std::vector<std::uint64_t> sorted1 = next1;
    std::sort(sorted1.begin(), sorted1.end());

    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t] || sig1_[k] != sig2_[t]) continue;
      if (++nodes_ > node_limit_) return -1;
      std::vector<std::uint64_t> next2(h2.size());
      for (std::size_t w = 0; w < h2.size(); ++w) next2[w] = mix(h2[w] + cols2_[t][w] + 1);
      std::vector<std::uint64_t> sorted2 = next2;
      std::sort(sorted2.begin(), sorted2.end());
      // Equal projections give equal hash multisets, so this never
      // discards a valid branch.
      if (sorted1 != sorted2) continue;
      used_[t] = true;
      image_[k] = t;
      const int r = descend(k + 1, next1, next2);
      used_[t] = false;
      if (r != 0) return r;
    }
    return 0;
  }

  std::vector<std::vector<std::uint64_t>> cols1_, cols2_;
  std::vector<Histogram> sig1_, sig2_;
  const GroupCode& c1_;
  const GroupCode& c2_;
  std::uint64_t node_limit_;
  std::size_t n_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
};

void check_comparable(const GroupCode& c1, const GroupCode& c2) {
  if (c1.length() != c2.length()) {
    throw LengthMismatchError("codes of length " + std::to_string(c1.length()) + " and " +
                              std::to_string(c2.length()));
  }
  if (!(c1.algebra().ring() == c2.algebra().ring())) throw AlgebraMismatchError("codes over different rings");
}

std::string describe_components(const EquivalenceResult& r) {
  std::size_t found = 0;
  for (auto s : r.component_statuses) found += s == EquivalenceStatus::kFound ? 1 : 0;
  std::string note = "componentwise permutations found for " + std::to_string(found) + " of " +
                     std::to_string(r.component_statuses.size()) + " components";
  for (std::size_t j = 0; j < r.component_permutations.size(); ++j) {
    note += j == 0 ? " (" : ", ";
    const auto& p = r.component_permutations[j];
    note += "P_" + std::to_string(j + 1) + " = " + (p ? p->to_string() : to_string(r.component_statuses[j]));
  }
  if (!r.component_permutations.empty()) note += ")";
  return note;
}

}  // namespace

std::string to_string(EquivalenceStatus status) {
  switch (status) {
    case EquivalenceStatus::kFound:
      return "found";
    case EquivalenceStatus::kNotEquivalent:
      return "not-equivalent";
    case EquivalenceStatus::kSearchExhausted:
      return "search-exhausted";
  }
  return "unknown";
}

bool verify_permutation(const GroupCode& c1, const GroupCode& c2, const Permutation& p) {
  check_comparable(c1, c2);
  if (p.size() != c1.length()) {
    throw LengthMismatchError("permutation of size " + std::to_string(p.size()) + " for codes of length " +
                              std::to_string(c1.length()));
  }
  p.validate();
  if (c1.cardinality() != c2.cardinality()) return false;
  for (std::size_t j = 0; j < c1.components().size(); ++j) {
    for (const auto& row : c1.component(j).rows) {
      if (!membership(p.apply(row), c2.component(j))) return false;
    }
  }
  return true;
}

EquivalenceResult find_permutation(const GroupCode& c1, const GroupCode& c2, const SearchOptions& options) {
  check_comparable(c1, c2);
  EquivalenceResult result;
  const std::size_t n = c1.length();
  if (n > options.max_length) {
    result.status = EquivalenceStatus::kSearchExhausted;
    result.diagnostics = "length " + std::to_string(n) + " exceeds the search limit " +
                         std::to_string(options.max_length);
    return result;
  }
  if (c1.cardinality() != c2.cardinality()) {
    result.status = EquivalenceStatus::kNotEquivalent;
    result.diagnostics = "cardinalities differ";
    return result;
  }

  std::vector<std::vector<std::uint64_t>> cols1, cols2;
  try {
    if (weight_enumerator(c1, options.enumeration_cap) != weight_enumerator(c2, options.enumeration_cap)) {
      result.status = EquivalenceStatus::kNotEquivalent;
      result.diagnostics = "weight enumerators differ";
      return result;
    }
    cols1 = columns_of(c1, options.enumeration_cap);
    cols2 = columns_of(c2, options.enumeration_cap);
  } catch (const EnumerationTooLargeError& e) {
    result.status = EquivalenceStatus::kSearchExhausted;
    result.diagnostics = e.what();
    return result;
  }

  std::vector<Histogram> sig1, sig2;
  for (std::size_t i = 0; i < n; ++i) {
    sig1.push_back(histogram(cols1[i]));
    sig2.push_back(histogram(cols2[i]));
  }
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      result.status = EquivalenceStatus::kNotEquivalent;
      result.diagnostics = "coordinate signatures differ";
      return result;
    }
  }

  Search search(std::move(cols1), std::move(cols2), std::move(sig1), std::move(sig2), c1, c2, options.node_limit);
  const int outcome = search.run();
  result.nodes_visited = search.nodes();
  if (outcome == 1) {
    result.status = EquivalenceStatus::kFound;
    result.permutation = Permutation{search.image()};
  } else if (outcome == 0) {
    result.status = EquivalenceStatus::kNotEquivalent;
    result.diagnostics = "no permutation survives the search";
  } else {
    result.status = EquivalenceStatus::kSearchExhausted;
    result.diagnostics = "node limit " + std::to_string(options.node_limit) + " reached";
  }
  return result;
}

EquivalenceResult check_dual_equivalence(const GroupCode& c, const GroupCode& d, const SearchOptions& options) {
  if (!lcp_check(c, d, false).is_lcp) throw NotLcpError("equivalence check needs an LCP pair");
  const GroupCode d_dual = code_dual(d);

  EquivalenceResult result = find_permutation(d_dual, c, options);
  result.d_c = min_distance(c, options.enumeration_cap).value;
  result.d_d_dual = min_distance(d_dual, options.enumeration_cap).value;
  result.distances_agree = result.d_c == result.d_d_dual;

  const auto parts_dual = code_crt_project(d_dual);
  const auto parts_c = code_crt_project(c);
  bool all_components = true;
  for (std::size_t j = 0; j < parts_c.size(); ++j) {
    const EquivalenceResult part = find_permutation(parts_dual[j], parts_c[j], options);
    result.component_statuses.push_back(part.status);
    result.component_permutations.push_back(part.permutation);
    all_components = all_components && part.status == EquivalenceStatus::kFound;
  }

  const std::string components = describe_components(result);
  switch (result.status) {
    case EquivalenceStatus::kFound:
      result.block_note = "single common permutation " + result.permutation->to_string() + " found; " + components;
      break;
    case EquivalenceStatus::kNotEquivalent:
      result.componentwise_only = all_components;
      result.block_note = (all_components ? "componentwise only: no single common permutation; "
                                          : "no single common permutation; ") +
                          components;
      break;
    case EquivalenceStatus::kSearchExhausted:
      result.block_note = "single permutation search exhausted (" + result.diagnostics + "); " + components;
      break;
  }
  return result;
}

}  // namespace lcp
