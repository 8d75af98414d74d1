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
#ifndef RAMLAB_ERROR_HPP
#define RAMLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramlab {

enum class ErrorCode {
  RankMismatch,
  InfiniteInput,
  NotPDivisible,
  ModelMismatch,
  InsufficientPrecision,
  NotInValuationRing,
  NotPthPower,
  MultipleRoot,
  NotIntegral,
  Precondition,
  CertificationFailed,
  ApproximantsExhausted,
  ContradictoryConstraints,
  SquareRootUnavailable,
  HypothesisNotMet,
  GuardViolation,
  Unsupported,
  InconsistentData,
  UnknownSuite,
  Parse,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is the
// machine-readable reason surfaced in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ramlab

#endif
