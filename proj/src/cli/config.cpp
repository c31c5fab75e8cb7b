/**************************************************************************
 * config.cpp
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

#include "lcp/cli/config.hpp"

#include <fstream>

#include "lcp/errors.hpp"

namespace lcp::cli {

namespace {

std::uint64_t get_unsigned(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned()) throw ValidationError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::int64_t get_integer(const Json& j) {
  if (!j.is_number_integer()) throw MalformedElementError("expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw MalformedElementError("integer out of range: " + j.dump());
  }
  return j.get<std::int64_t>();
}

ChainRingElement parse_component(const Json& j, const ChainRingSpec& ring) {
  if (j.is_number_integer()) return ring.from_integer(get_integer(j));
  if (!j.is_array() || j.size() != ring.r()) {
    throw MalformedElementError("component literal " + j.dump() + " needs an integer or " + std::to_string(ring.r()) +
                                " coefficients");
  }
  ChainRingElement a = ring.zero();
  for (std::size_t i = 0; i < ring.r(); ++i) a.coeffs[i] = ring.from_integer(get_integer(j[i])).coeffs[0];
  return a;
}

Json component_to_json(const ChainRingSpec& ring, const ChainRingElement& a) {
  if (ring.r() == 1) return a.coeffs[0];
  Json arr = Json::array();
  for (auto c : a.coeffs) arr.push_back(c);
  return arr;
}

}  // namespace

const GroupCode& Instance::code(const std::string& name) const {
  const auto it = codes.find(name);
  if (it == codes.end()) throw ValidationError("unknown code \"" + name + "\"");
  return it->second;
}

ProductRingSpec parse_ring(const Json& j) {
  if (j.is_number_unsigned()) return ProductRingSpec::from_modulus(j.get<std::uint64_t>());
  if (!j.is_array() || j.empty()) throw InvalidRingError("ring must be a modulus or a non-empty component list");
  std::vector<ChainRingSpec> parts;
  for (const auto& c : j) {
    if (!c.is_object()) throw InvalidRingError("ring component must be an object with p, e, r");
    const auto p = get_unsigned(c, "p");
    const auto e = c.contains("e") ? get_unsigned(c, "e") : 1;
    const auto r = c.contains("r") ? get_unsigned(c, "r") : 1;
    if (e > 64 || r > 64) throw InvalidRingError("ring exponent out of range");
    if (c.contains("modulus")) {
      Poly f;
      for (const auto& x : c.at("modulus")) {
        if (!x.is_number_unsigned()) throw InvalidRingError("modulus coefficients must be non-negative integers");
        f.push_back(x.get<std::uint64_t>());
      }
      parts.emplace_back(p, static_cast<unsigned>(e), static_cast<unsigned>(r), std::move(f));
    } else {
      parts.emplace_back(p, static_cast<unsigned>(e), static_cast<unsigned>(r));
    }
  }
  return ProductRingSpec(std::move(parts));
}

FiniteGroup parse_group(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ValidationError("group must be an object");
  if (j.contains("table")) {
    if (!j.at("table").is_string()) throw ValidationError("group table must be a file path");
    const auto path = base_dir / j.at("table").get<std::string>();
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open Cayley table " + path.string());
    return read_cayley_table(in);
  }
  if (!j.contains("family") || !j.at("family").is_string()) throw ValidationError("group needs a family or a table");
  const std::string family = j.at("family").get<std::string>();
  if (family == "cyclic") return FiniteGroup::cyclic(get_unsigned(j, "n"));
  if (family == "dihedral") return FiniteGroup::dihedral(get_unsigned(j, "n"));
  if (family == "symmetric") return FiniteGroup::symmetric(get_unsigned(j, "m"));
  if (family == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty()) {
      throw ValidationError("product group needs a non-empty factors list");
    }
    const Json& factors = j.at("factors");
    FiniteGroup g = parse_group(factors[0], base_dir);
    for (std::size_t i = 1; i < factors.size(); ++i) g = FiniteGroup::direct_product(g, parse_group(factors[i], base_dir));
    return g;
  }
  throw ValidationError("unknown group family \"" + family + "\"");
}

ProductRingElement parse_coefficient(const Json& j, const ProductRingSpec& ring) {
  ProductRingElement a;
  if (j.is_number_integer()) {
    const std::int64_t k = get_integer(j);
    for (const auto& c : ring.components()) a.parts.push_back(c.from_integer(k));
    return a;
  }
  if (ring.arity() == 1 && j.is_array() && j.size() == ring.component(0).r() &&
      (j.empty() || j[0].is_number_integer()) && ring.component(0).r() > 1) {
    a.parts.push_back(parse_component(j, ring.component(0)));
    return a;
  }
  if (!j.is_array() || j.size() != ring.arity()) {
    throw MalformedElementError("coefficient " + j.dump() + " needs an integer or " + std::to_string(ring.arity()) +
                                " component entries");
  }
  for (std::size_t k = 0; k < ring.arity(); ++k) a.parts.push_back(parse_component(j[k], ring.component(k)));
  return a;
}

AlgebraElement parse_sparse_element(const Json& j, const GroupAlgebra& algebra) {
  if (!j.is_array()) throw MalformedElementError("element must be a list of [index, coefficient] pairs");
  AlgebraElement a = algebra.zero();
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned()) {
      throw MalformedElementError("element term " + term.dump() + " is not an [index, coefficient] pair");
    }
    const auto g = term[0].get<std::uint64_t>();
    if (g >= algebra.dimension()) throw MalformedElementError("group index " + std::to_string(g) + " out of range");
    a.coeffs[g] = algebra.ring().add(a.coeffs[g], parse_coefficient(term[1], algebra.ring()));
  }
  return a;
}

AlgebraElement parse_dense_element(const Json& j, const GroupAlgebra& algebra) {
  if (!j.is_array() || j.size() != algebra.dimension()) {
    throw LengthMismatchError("element needs exactly " + std::to_string(algebra.dimension()) + " coefficients");
  }
  AlgebraElement a;
  for (const auto& c : j) a.coeffs.push_back(parse_coefficient(c, algebra.ring()));
  return a;
}

Json coefficient_to_json(const ProductRingSpec& ring, const ProductRingElement& a) {
  if (ring.is_integer_ring()) return ring.lift(a);
  if (ring.arity() == 1) return component_to_json(ring.component(0), a.parts[0]);
  Json arr = Json::array();
  for (std::size_t k = 0; k < ring.arity(); ++k) arr.push_back(component_to_json(ring.component(k), a.parts[k]));
  return arr;
}

Json dense_to_json(const GroupAlgebra& algebra, const AlgebraElement& a) {
  Json arr = Json::array();
  for (const auto& c : a.coeffs) arr.push_back(coefficient_to_json(algebra.ring(), c));
  return arr;
}

Instance load_instance(const Json& doc, const std::filesystem::path& base_dir) {
  try {
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    if (!doc.contains("ring")) throw ValidationError("config has no ring");
    if (!doc.contains("group")) throw ValidationError("config has no group");
    Instance inst;
    const ProductRingSpec ring = parse_ring(doc.at("ring"));
    const FiniteGroup group = parse_group(doc.at("group"), base_dir);
    inst.algebra = std::make_shared<const GroupAlgebra>(ring, group);
    if (doc.contains("seed")) inst.seed = get_unsigned(doc, "seed");
    if (doc.contains("codes")) {
      if (!doc.at("codes").is_object()) throw ValidationError("codes must be an object of named generator lists");
      for (const auto& [name, spec] : doc.at("codes").items()) {
        AlgebraPtr algebra = inst.algebra;
        const Json* gens = &spec;
        if (spec.is_object()) {
          if (spec.contains("ring") || spec.contains("group")) {
            algebra = std::make_shared<const GroupAlgebra>(
                spec.contains("ring") ? parse_ring(spec.at("ring")) : ring,
                spec.contains("group") ? parse_group(spec.at("group"), base_dir) : group);
          }
          if (!spec.contains("generators")) throw ValidationError("code \"" + name + "\" has no generators");
          gens = &spec.at("generators");
        }
        if (!gens->is_array()) throw ValidationError("code \"" + name + "\" must list its generators");
        std::vector<AlgebraElement> elems;
        for (const auto& g : *gens) elems.push_back(parse_sparse_element(g, *algebra));
        inst.codes.emplace(name, code_from_generators(algebra, std::move(elems)));
      }
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("cannot parse config " + path.string() + ": " + e.what());
  }
  return load_instance(doc, path.parent_path());
}

}  // namespace lcp::cli
