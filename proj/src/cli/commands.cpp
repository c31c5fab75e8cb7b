/**************************************************************************
 * commands.cpp
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

#include "lcp/cli/commands.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcp/equivalence.hpp"
#include "lcp/errors.hpp"

namespace lcp::cli {

namespace {

Json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return x.str();
}

std::string join_bools(const std::vector<bool>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::string(v[i] ? "yes" : "no");
  return out + "]";
}

Json permutation_json(const std::optional<Permutation>& p) {
  if (!p) return nullptr;
  return p->map;
}

Json code_json(const std::string& name, const GroupCode& c) {
  Json comps = Json::array();
  for (const auto& f : c.components()) {
    comps.push_back({{"ring", f.ring.describe()},
                     {"cardinality", big_to_json(cardinality(f))},
                     {"pivot_form", format_form(f)},
                     {"pivot_cols", f.pivot_cols},
                     {"pivot_vals", f.pivot_vals}});
  }
  return {{"name", name},
          {"algebra", c.algebra().describe()},
          {"length", c.length()},
          {"cardinality", big_to_json(c.cardinality())},
          {"components", comps}};
}

void code_text(std::ostringstream& out, const std::string& name, const GroupCode& c) {
  out << "code " << name << " in " << c.algebra().describe() << "\n";
  out << "  |" << name << "| = " << c.cardinality() << "\n";
  for (std::size_t j = 0; j < c.components().size(); ++j) {
    const PivotForm& f = c.component(j);
    out << "  component " << j + 1 << " over " << f.ring.describe() << ": size " << cardinality(f) << ", pivot form "
        << format_form(f) << "\n";
  }
}

Json equivalence_json(const EquivalenceResult& r) {
  Json statuses = Json::array(), perms = Json::array();
  for (std::size_t j = 0; j < r.component_statuses.size(); ++j) {
    statuses.push_back(to_string(r.component_statuses[j]));
    perms.push_back(permutation_json(r.component_permutations[j]));
  }
  return {{"status", to_string(r.status)},
          {"permutation", permutation_json(r.permutation)},
          {"d_c", r.d_c},
          {"d_d_dual", r.d_d_dual},
          {"distances_agree", r.distances_agree},
          {"componentwise_only", r.componentwise_only},
          {"component_statuses", statuses},
          {"component_permutations", perms},
          {"block_note", r.block_note},
          {"diagnostics", r.diagnostics}};
}

SearchOptions search_options(const CommandOptions& opts) {
  SearchOptions s;
  s.enumeration_cap = opts.max_enum;
  return s;
}

std::size_t count_lcp_pairs(const std::vector<GroupCode>& ideals) {
  std::size_t count = 0;
  for (const auto& a : ideals) {
    for (const auto& b : ideals) count += lcp_check(a, b, false).is_lcp ? 1 : 0;
  }
  return count;
}

}  // namespace

AlgebraElement sample_codeword(const GroupCode& d, Lcg& rng) {
  const GroupAlgebra& alg = d.algebra();
  std::vector<RingVector> parts;
  for (const auto& form : d.components()) {
    const ChainRingSpec& ring = form.ring;
    RingVector acc(alg.dimension(), ring.zero());
    for (std::size_t k = 0; k < form.rows.size(); ++k) {
      std::uint64_t bound = 1;
      for (unsigned i = form.pivot_vals[k]; i < ring.e(); ++i) bound *= ring.p();
      ChainRingElement a = ring.zero();
      for (unsigned i = 0; i < ring.r(); ++i) a.coeffs[i] = (rng.next() >> 33) % bound;
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = ring.add(acc[i], ring.mul(a, form.rows[k][i]));
    }
    parts.push_back(std::move(acc));
  }
  return alg.from_component_vectors(parts);
}

CommandResult cmd_info(const Instance& inst) {
  const GroupAlgebra& alg = *inst.algebra;
  const ProductRingSpec& ring = alg.ring();
  Json comps = Json::array();
  std::ostringstream text;
  text << "ring " << ring.describe() << ", |R| = " << ring.size() << ", s = " << ring.arity() << "\n";
  for (std::size_t j = 0; j < ring.arity(); ++j) {
    const ChainRingSpec& c = ring.component(j);
    comps.push_back({{"p", c.p()},
                     {"e", c.e()},
                     {"r", c.r()},
                     {"modulus", c.modulus()},
                     {"size", c.size()},
                     {"description", c.describe()}});
    text << "  R_" << j + 1 << " = " << c.describe() << ": p = " << c.p() << ", e = " << c.e() << ", r = " << c.r()
         << ", |R_" << j + 1 << "| = " << c.size() << "\n";
  }
  text << "group of order " << alg.dimension() << (alg.group().is_abelian() ? " (abelian)" : " (non-abelian)") << "\n";
  text << "|R[G]| = " << alg.size() << "\n";
  for (const auto& [name, code] : inst.codes) text << "code " << name << ": size " << code.cardinality() << "\n";

  Json codes = Json::object();
  for (const auto& [name, code] : inst.codes) codes[name] = big_to_json(code.cardinality());
  CommandResult res;
  res.report = {{"command", "info"},
                {"ring", {{"description", ring.describe()}, {"s", ring.arity()}, {"size", ring.size()}, {"components", comps}}},
                {"group", {{"order", alg.dimension()}, {"abelian", alg.group().is_abelian()}}},
                {"algebra_size", big_to_json(alg.size())},
                {"codes", codes}};
  res.text = text.str();
  return res;
}

CommandResult cmd_code(const Instance& inst, const std::string& name) {
  const GroupCode& c = inst.code(name);
  CommandResult res;
  res.report = code_json(name, c);
  res.report["command"] = "code";
  std::ostringstream text;
  code_text(text, name, c);
  res.text = text.str();
  return res;
}

CommandResult cmd_dual(const Instance& inst, const std::string& name) {
  const GroupCode dual = code_dual(inst.code(name));
  const std::string label = name + "^perp";
  CommandResult res;
  res.report = code_json(label, dual);
  res.report["command"] = "dual";
  res.report["is_full"] = dual.is_full();
  std::ostringstream text;
  code_text(text, label, dual);
  if (dual.is_full()) text << "  " << label << " is the full algebra\n";
  res.text = text.str();
  return res;
}

CommandResult cmd_mindist(const Instance& inst, const std::string& name, const CommandOptions& opts) {
  const GroupCode& c = inst.code(name);
  const MinDistance d = min_distance(c, opts.max_enum);
  const auto weights = weight_enumerator(c, opts.max_enum);
  CommandResult res;
  res.report = code_json(name, c);
  res.report["command"] = "mindist";
  res.report["min_distance"] = d.value;
  res.report["zero_code"] = d.zero_code;
  res.report["weight_enumerator"] = weights;
  std::ostringstream text;
  code_text(text, name, c);
  text << "  d(" << name << ") = " << d.value << (d.zero_code ? " (zero code)" : "") << "\n  weights:";
  for (std::size_t w = 0; w < weights.size(); ++w) {
    if (weights[w] > 0) text << " A_" << w << " = " << weights[w];
  }
  text << "\n";
  res.text = text.str();
  return res;
}

CommandResult cmd_lcp(const Instance& inst, const std::string& cname, const std::string& dname,
                      const CommandOptions& opts) {
  const GroupCode& c = inst.code(cname);
  const GroupCode& d = inst.code(dname);
  const LcpReport r = lcp_check(c, d, true, opts.max_enum);
  CommandResult res;
  res.exit_code = r.is_lcp ? kExitOk : kExitNotLcp;
  res.report = {{"command", "lcp"},
                {"c", cname},
                {"d", dname},
                {"is_lcp", r.is_lcp},
                {"intersection_size", big_to_json(r.intersection_size)},
                {"sum_size", big_to_json(r.sum_size)},
                {"sum_is_full", r.sum_is_full},
                {"direct_verdict", r.direct_verdict},
                {"componentwise_verdict", r.componentwise_verdict},
                {"component_verdicts", r.component_verdicts},
                {"paths_agree", r.paths_agree()}};
  std::ostringstream text;
  text << "(" << cname << ", " << dname << ") in " << c.algebra().describe() << "\n";
  text << "  |" << cname << " & " << dname << "| = " << r.intersection_size << ", |" << cname << " + " << dname
       << "| = " << r.sum_size << "\n";
  text << "  direct verdict: " << (r.direct_verdict ? "LCP" : "not LCP")
       << ", componentwise verdicts: " << join_bools(r.component_verdicts) << "\n";
  text << "  " << (r.is_lcp ? "LCP pair" : "not an LCP pair") << "\n";
  if (r.is_lcp) {
    const SecurityParameter& sp = *r.security;
    const EquivalenceResult eq = check_dual_equivalence(c, d, search_options(opts));
    res.report["security"] = {{"d_c", sp.d_c.value},
                              {"d_d_dual", sp.d_d_dual.value},
                              {"d_lcp", sp.value},
                              {"distances_agree", sp.distances_agree}};
    res.report["equivalence"] = equivalence_json(eq);
    text << "  d(" << cname << ") = " << sp.d_c.value << ", d(" << dname << "^perp) = " << sp.d_d_dual.value
         << ", d_LCP = " << sp.value << "\n";
    text << "  equivalence " << dname << "^perp -> " << cname << ": " << to_string(eq.status);
    if (eq.permutation) text << ", permutation " << eq.permutation->to_string();
    text << "\n  " << eq.block_note << "\n";
  }
  res.text = text.str();
  return res;
}

CommandResult cmd_dsm(const Instance& inst, const std::string& cname, const std::string& dname, const Json& message,
                      const CommandOptions& opts) {
  const GroupCode& c = inst.code(cname);
  const GroupCode& d = inst.code(dname);
  const GroupAlgebra& alg = c.algebra();
  if (!lcp_check(c, d, false).is_lcp) throw NotLcpError("(" + cname + ", " + dname + ") is not an LCP pair");
  const AlgebraElement msg = parse_dense_element(message, alg);
  alg.validate(msg);
  if (!c.contains(msg)) throw ValidationError("message " + message.dump() + " is not a codeword of " + cname);

  const std::uint64_t seed = opts.seed.value_or(inst.seed);
  Lcg rng(seed);
  const AlgebraElement mask = sample_codeword(d, rng);
  const AlgebraElement z = alg.add(msg, mask);
  const auto [rc, rd] = dsm_split(z, c, d);
  const bool ok = rc == msg && rd == mask;
  if (!ok) throw Error("direct sum masking round trip failed");

  CommandResult res;
  res.report = {{"command", "dsm"},
                {"c", cname},
                {"d", dname},
                {"seed", seed},
                {"message", dense_to_json(alg, msg)},
                {"mask", dense_to_json(alg, mask)},
                {"z", dense_to_json(alg, z)},
                {"recovered_c", dense_to_json(alg, rc)},
                {"recovered_d", dense_to_json(alg, rd)},
                {"round_trip", ok}};
  std::ostringstream text;
  text << "seed " << seed << "\n";
  text << "  message c = " << alg.format(msg) << "\n";
  text << "  mask    d = " << alg.format(mask) << "\n";
  text << "  masked  z = " << alg.format(z) << "\n";
  text << "  recovered (" << alg.format(rc) << ", " << alg.format(rd) << "), round trip exact\n";
  res.text = text.str();
  return res;
}

CommandResult cmd_search_lcp(const Instance& inst, const CommandOptions& opts) {
  const AlgebraPtr& algebra = inst.algebra;
  const std::vector<GroupCode> ideals = enumerate_ideals(algebra, opts.max_ideals);
  std::ostringstream text;
  text << "ideals of " << algebra->describe() << ": " << ideals.size() << "\n";
  Json ideal_list = Json::array();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    ideal_list.push_back({{"index", i},
                          {"cardinality", big_to_json(ideals[i].cardinality())},
                          {"form", ideals[i].canonical_form()}});
    text << "  I" << i << ": size " << ideals[i].cardinality() << ", " << ideals[i].canonical_form() << "\n";
  }

  Json pairs = Json::array();
  bool all_agree = true, all_paths = true;
  std::size_t lcp_count = 0;
  text << "LCP pairs (C, D):\n";
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      const LcpReport r = lcp_check(ideals[i], ideals[k], false);
      all_paths = all_paths && r.paths_agree();
      if (!r.is_lcp) continue;
      ++lcp_count;
      const EquivalenceResult eq = check_dual_equivalence(ideals[i], ideals[k], search_options(opts));
      all_agree = all_agree && eq.distances_agree;
      const std::size_t d_lcp = std::min(eq.d_c, eq.d_d_dual);
      pairs.push_back({{"c", i},
                       {"d", k},
                       {"d_c", eq.d_c},
                       {"d_d_dual", eq.d_d_dual},
                       {"d_lcp", d_lcp},
                       {"equivalence", to_string(eq.status)},
                       {"permutation", permutation_json(eq.permutation)},
                       {"componentwise_only", eq.componentwise_only}});
      text << "  (I" << i << ", I" << k << "): d(C) = " << eq.d_c << ", d(D^perp) = " << eq.d_d_dual
           << ", d_LCP = " << d_lcp << ", equivalence " << to_string(eq.status);
      if (eq.permutation) text << " " << eq.permutation->to_string();
      if (eq.componentwise_only) text << " (componentwise only)";
      text << "\n";
    }
  }

  Json comp_counts = Json::array();
  std::uint64_t product = 1;
  for (std::size_t j = 0; j < algebra->ring().arity(); ++j) {
    auto part = std::make_shared<const GroupAlgebra>(algebra->component_algebra(j));
    const std::size_t count = count_lcp_pairs(enumerate_ideals(part, opts.max_ideals));
    comp_counts.push_back(count);
    product *= count;
  }

  CommandResult res;
  res.report = {{"command", "search-lcp"},
                {"algebra", algebra->describe()},
                {"ideals", ideal_list},
                {"lcp_pairs", pairs},
                {"summary",
                 {{"ideal_count", ideals.size()},
                  {"ordered_pairs", ideals.size() * ideals.size()},
                  {"lcp_pair_count", lcp_count},
                  {"component_lcp_pair_counts", comp_counts},
                  {"component_product", product},
                  {"paths_agree", all_paths},
                  {"distance_equality_holds", all_agree}}}};
  text << "component LCP pair counts:";
  for (const auto& x : comp_counts) text << " " << x.get<std::uint64_t>();
  text << " (product " << product << ")\n";
  text << "summary: " << lcp_count << " LCP pairs among " << ideals.size() * ideals.size()
       << " ordered pairs; d(C) = d(D^perp) for all pairs: " << (all_agree ? "yes" : "NO") << "\n";
  res.text = text.str();
  return res;
}

CommandResult cmd_crt(const Instance& inst, const std::string& name) {
  const GroupCode& c = inst.code(name);
  const auto parts = code_crt_project(c);
  const GroupCode combined = code_crt_combine(parts);
  const bool identity = combined.algebra() == c.algebra() && combined.components() == c.components();

  Json comps = Json::array();
  std::ostringstream text;
  text << "CRT components of " << name << " (size " << c.cardinality() << ")\n";
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const GroupCode& p = parts[j];
    Json gens = Json::array();
    for (const auto& g : p.generators()) gens.push_back(p.algebra().format(g));
    comps.push_back({{"ring", p.algebra().ring().describe()},
                     {"cardinality", big_to_json(p.cardinality())},
                     {"pivot_form", format_form(p.component(0))},
                     {"generators", gens}});
    text << "  " << name << "_" << j + 1 << " in " << p.algebra().describe() << ": size " << p.cardinality()
         << ", pivot form " << format_form(p.component(0)) << "\n";
  }
  text << "  combine(project(" << name << ")) = " << name << ": " << (identity ? "yes" : "NO") << "\n";

  CommandResult res;
  res.exit_code = identity ? kExitOk : kExitValidation;
  res.report = {{"command", "crt"},
                {"name", name},
                {"cardinality", big_to_json(c.cardinality())},
                {"components", comps},
                {"identity_holds", identity}};
  res.text = text.str();
  return res;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group codes over finite principal ideal rings: LCP pairs, duals, distances"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  bool json_out = false;
  std::uint64_t seed = 0;
  CommandOptions opts;
  app.add_option("--config", config_path, "Instance config (JSON)");
  app.add_flag("--json", json_out, "Print the report as JSON");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for mask sampling (overrides the config)");
  app.add_option("--max-enum", opts.max_enum, "Codeword enumeration cap");
  app.add_option("--max-ideals", opts.max_ideals, "Largest |R[G]| for ideal enumeration");

  std::string name, other, message;
  auto* info = app.add_subcommand("info", "Ring, group and algebra sizes");
  auto* code = app.add_subcommand("code", "Size and pivot forms of a code");
  code->add_option("name", name)->required();
  auto* dual = app.add_subcommand("dual", "Dual of a code");
  dual->add_option("name", name)->required();
  auto* mindist = app.add_subcommand("mindist", "Minimum distance and weight enumerator");
  mindist->add_option("name", name)->required();
  auto* lcp = app.add_subcommand("lcp", "Decide whether (C, D) is an LCP pair");
  lcp->add_option("c", name)->required();
  lcp->add_option("d", other)->required();
  auto* dsm = app.add_subcommand("dsm", "Direct sum masking round trip");
  dsm->add_option("c", name)->required();
  dsm->add_option("d", other)->required();
  dsm->add_option("message", message, "JSON array of n coefficients")->required();
  auto* search = app.add_subcommand("search-lcp", "All LCP pairs of ideals");
  auto* crt = app.add_subcommand("crt", "CRT components of a code");
  crt->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }
  if (*seed_opt) opts.seed = seed;

  auto fail = [&](int code_value, const std::string& what) {
    err << "error: " << what << "\n";
    if (json_out) out << Json{{"error", what}, {"exit_code", code_value}}.dump(2) << "\n";
    return code_value;
  };

  try {
    if (config_path.empty()) throw ValidationError("--config is required");
    const Instance inst = load_instance_file(config_path);
    CommandResult res;
    if (info->parsed()) {
      res = cmd_info(inst);
    } else if (code->parsed()) {
      res = cmd_code(inst, name);
    } else if (dual->parsed()) {
      res = cmd_dual(inst, name);
    } else if (mindist->parsed()) {
      res = cmd_mindist(inst, name, opts);
    } else if (lcp->parsed()) {
      res = cmd_lcp(inst, name, other, opts);
    } else if (dsm->parsed()) {
      Json msg;
      try {
        msg = Json::parse(message);
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError("message is not valid JSON: " + message);
      }
      res = cmd_dsm(inst, name, other, msg, opts);
    } else if (search->parsed()) {
      res = cmd_search_lcp(inst, opts);
    } else {
      res = cmd_crt(inst, name);
    }
    if (json_out) {
      out << res.report.dump(2) << "\n";
    } else {
      out << res.text;
    }
    return res.exit_code;
  } catch (const EnumerationTooLargeError& e) {
    return fail(kExitResourceCap, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(kExitValidation, e.what());
  } catch (const Error& e) {
    return fail(kExitValidation, e.what());
  }
}

}  // namespace lcp::cli
