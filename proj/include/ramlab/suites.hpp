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
#ifndef RAMLAB_SUITES_HPP
#define RAMLAB_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

// Property suites shared by `ramlab verify` and the acceptance run. Every
// case is checked against an oracle computed independently of the code under
// test. Deterministic for a fixed (seed, size).
namespace ramlab::suites {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;
  std::size_t skipped = 0;  // inadmissible inputs, reported but not judged
  std::string note;

  std::size_t passed() const;
  bool all_pass() const { return !cases.empty() && passed() == cases.size(); }
};

// monotonicity, exact fixed point, closed form vs iteration for |i| <= 10, inverse law
SuiteResult delta(long p, std::uint64_t seed, std::size_t size);
// part 'a' or 'c' of the 1-unit shifts over Q_2 at precision 2^12; witnesses
// re-verify and is_pth_power agrees with the mod-8 square oracle
SuiteResult oneunit(char part, std::uint64_t seed, std::size_t size);
// Artin-Schreier normal forms on the seeded corpus, plus the worked t^-3 x^2 instance
SuiteResult asnf(long p, std::uint64_t seed, std::size_t size);
// generator criterion against brute force on every list of length <= 4 over
// {-3/2, ..., 3/2} plus zero
SuiteResult criterion(long p);
// exact p = 2 engine on `size` admissible corpus inputs
SuiteResult kummer(std::uint64_t seed, std::size_t size);
// random value systems: termination, fold law, distinct contributions
SuiteResult simulator(long p, std::uint64_t seed, std::size_t size);
// simulator vs exact traces on every completed exact run (corpus plus a merge instance)
SuiteResult trace_agreement(std::uint64_t seed, std::size_t size);
// catalog cross-check, tame table, tower multiplicativity, composite vs layerwise
SuiteResult ext();

// delta, oneunit, asnf, kummer, ext or all; throws UnknownSuite
std::vector<SuiteResult> run(const std::string& name, std::uint64_t seed, std::size_t size);

}  // namespace ramlab::suites

#endif
