/**************************************************************************
 * commands.hpp
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lcp/cli/config.hpp"

namespace lcp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotLcp = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResourceCap = 3;

struct CommandOptions {
  std::uint64_t max_enum = kDefaultEnumerationCap;
  std::uint64_t max_ideals = std::uint64_t{1} << 12;
  /// Overrides the config seed when set.
  std::optional<std::uint64_t> seed;
};

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
  std::string text;
};

/// 64-bit LCG: state <- state * 6364136223846793005 + 1442695040888963407,
/// next() returns the updated state.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

 private:
  std::uint64_t state_;
};

/// Uniform-ish element of D: per component, per pivot row, per polynomial
/// coefficient, (next() >> 33) mod p^(e - t).
AlgebraElement sample_codeword(const GroupCode& d, Lcg& rng);

CommandResult cmd_info(const Instance& inst);
CommandResult cmd_code(const Instance& inst, const std::string& name);
CommandResult cmd_dual(const Instance& inst, const std::string& name);
CommandResult cmd_mindist(const Instance& inst, const std::string& name, const CommandOptions& opts = {});
CommandResult cmd_lcp(const Instance& inst, const std::string& c, const std::string& d, const CommandOptions& opts = {});
/// message: a dense JSON array of n coefficient literals, which must lie in C.
CommandResult cmd_dsm(const Instance& inst, const std::string& c, const std::string& d, const Json& message,
                      const CommandOptions& opts = {});
CommandResult cmd_search_lcp(const Instance& inst, const CommandOptions& opts = {});
CommandResult cmd_crt(const Instance& inst, const std::string& name);

/// Full command line handling. Prints the text report, or the JSON report
/// with --json, to out; errors go to err. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcp::cli
