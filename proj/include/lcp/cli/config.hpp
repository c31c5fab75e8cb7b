/**************************************************************************
 * config.hpp
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

// Instance configuration files (JSON) and literal conversions.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "lcp/group_code.hpp"

namespace lcp::cli {

using Json = nlohmann::ordered_json;

struct Instance {
  AlgebraPtr algebra;
  /// Codes by name; a code may override ring or group, so algebras can differ.
  std::map<std::string, GroupCode> codes;
  std::uint64_t seed = 0;

  const GroupCode& code(const std::string& name) const;
};

/// Integer modulus m, or a list of {p, e, r[, modulus]} objects.
ProductRingSpec parse_ring(const Json& j);
/// {"family": ..., ...} or {"table": path}; paths resolve against base_dir.
FiniteGroup parse_group(const Json& j, const std::filesystem::path& base_dir);

/// An integer (its image in every component) or an array of one entry per
/// component, each an integer or an array of r polynomial coefficients.
ProductRingElement parse_coefficient(const Json& j, const ProductRingSpec& ring);
/// A list of [group-index, coefficient] pairs; repeated indices add up.
AlgebraElement parse_sparse_element(const Json& j, const GroupAlgebra& algebra);
/// An array of exactly n coefficient literals in group-index order.
AlgebraElement parse_dense_element(const Json& j, const GroupAlgebra& algebra);

/// Inverse of parse_coefficient: the integer in [0, m) for Z/m, otherwise
/// the per-component form (a bare component literal when s = 1).
Json coefficient_to_json(const ProductRingSpec& ring, const ProductRingElement& a);
Json dense_to_json(const GroupAlgebra& algebra, const AlgebraElement& a);

/// Throws ValidationError for malformed documents or failed references.
Instance load_instance(const Json& doc, const std::filesystem::path& base_dir);
Instance load_instance_file(const std::filesystem::path& path);

}  // namespace lcp::cli
