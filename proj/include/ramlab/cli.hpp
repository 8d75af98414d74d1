/* Copyright (C) 2026 The ramlab Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef RAMLAB_CLI_HPP
#define RAMLAB_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramlab/approx.hpp"
#include "ramlab/poly.hpp"

namespace ramlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitComputation = 3, kExitVerification = 4 };

// Element and polynomial text, evaluated in `m`. Atoms: integers and
// fractions, t, u (iterated models), pi (p-adic uniformizer), a (generator
// of the residue field), and x or X when `allow_x`. `t^-3/2` and `t^(-3/2)`
// are the same exponent. A trailing `@prec v` truncates; for p-adic models
// `@prec p^k` means absolute precision k.
Poly parse_poly(const ModelPtr& m, const std::string& text, bool allow_x = true);
Element parse_element(const ModelPtr& m, const std::string& text);

// One `key = value` line, with its position for error messages.
struct Setting {
  std::string key;
  std::string value;
  int line = 0;
  int column = 0;  // column of the value
};

struct StreamSpec {
  std::string kind;  // xi, ambient or explicit
  long terms = 40;
  std::optional<Element> ambient;
  std::vector<Approximant> approximants;
};

struct Job {
  std::string task;
  std::map<std::string, std::vector<Setting>> blocks;  // echo, by block name
  ModelPtr model;
  std::optional<StreamSpec> stream;

  std::optional<Poly> poly;  // f, h or the minimal polynomial
  std::optional<Value> prec;
  std::size_t confirmations = kDefaultConfirmations;

  // nf-kummer-sim
  long sim_p = 2;
  Value sim_vp = Value(Rational(1));
  std::map<long, Value> sim_entries;

  // ext-invariants
  std::optional<long> declared_e, declared_f;
  bool residue_separable = true;

  // hensel
  long eta = 0;

  // verify
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t size = 100;
};

// Throws Error(Parse) with a "name:line:column: " prefix on malformed input.
Job parse_job(const std::string& text, const std::string& name = "job");

struct Overrides {
  std::optional<Value> prec;
  std::optional<std::size_t> confirmations;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

// Computation errors become an `error` entry and exit 3; failed re-checks exit 4.
Outcome run_job(const Job& job, const Overrides& ov = {});
Outcome run_verify(const std::string& suite, std::uint64_t seed, std::size_t size);

// Sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& report);

}  // namespace ramlab::cli

#endif
