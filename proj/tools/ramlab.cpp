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
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ramlab/cli.hpp"
#include "ramlab/error.hpp"

namespace {

using namespace ramlab;

int emit(const cli::Outcome& out, const std::string& json_path) {
  std::string text = cli::render(out.report);
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(json_path, std::ios::binary);
    if (!f) {
      std::cerr << "ramlab: cannot write " << json_path << "\n";
      return cli::kExitComputation;
    }
    f << text;
  }
  if (out.exit_code == cli::kExitComputation) std::cerr << "ramlab: " << out.report["error"]["message"].get<std::string>() << "\n";
  if (out.exit_code == cli::kExitVerification) std::cerr << "ramlab: verification failed\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramlab: valued-field normal forms and extension invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string prec_text, json_path;
  std::size_t confirmations = 0;
  app.add_option("--prec", prec_text, "working precision (value syntax, or p^k for p-adic models)");
  app.add_option("--confirmations", confirmations, "confirmation count S for stabilization")->check(CLI::Range(1, 64));
  app.add_option("--json", json_path, "write the report here instead of stdout");

  auto* run = app.add_subcommand("run", "run a job file");
  std::string job_path;
  run->add_option("jobfile", job_path)->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t size = 100;
  verify->add_option("--suite", suite, "delta, oneunit, asnf, kummer, ext or all")->required();
  verify->add_option("--seed", seed);
  verify->add_option("--size", size)->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitParse;
  }

  try {
    if (verify->parsed()) return emit(cli::run_verify(suite, seed, size), json_path);

    std::ifstream in(job_path, std::ios::binary);
    if (!in) {
      std::cerr << "ramlab: cannot read " << job_path << "\n";
      return cli::kExitParse;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto job = cli::parse_job(buf.str(), job_path);
    cli::Overrides ov;
    if (!prec_text.empty()) {
      try {
        // p^k only means something once the model is known
        ov.prec = job.model ? cli::parse_element(job.model, "0 @prec " + prec_text).precision() : Value::parse(prec_text);
      } catch (const Error& e) {
        throw Error(ErrorCode::Parse, "--prec: " + std::string(e.what()));
      }
    }
    if (confirmations) ov.confirmations = confirmations;
    return emit(cli::run_job(job, ov), json_path);
  } catch (const Error& e) {
    std::cerr << "ramlab: " << e.what() << "\n";
    bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::UnknownSuite;
    return usage ? cli::kExitParse : cli::kExitComputation;
  }
}
