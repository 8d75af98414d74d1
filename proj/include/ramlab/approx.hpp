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
#ifndef RAMLAB_APPROX_HPP
#define RAMLAB_APPROX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/field.hpp"
#include "ramlab/poly.hpp"

namespace ramlab {

inline constexpr std::size_t kDefaultConfirmations = 3;

struct Approximant {
  Element c;
  Value gamma;  // v(x - c)
};

// Finite prefix of a pseudo-Cauchy stream (c_nu, v(x - c_nu)) for a symbolic
// transcendental x. With an ambient element xi the stream is extended by
// truncating xi below successive support points. Append-only; extend() must
// not run concurrently with readers.
class ApproximationType {
 public:
  explicit ApproximationType(ModelPtr base, std::vector<Approximant> given = {});
  static ApproximationType from_ambient(ModelPtr base, Element ambient);

  const ModelPtr& model() const noexcept { return model_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Approximant& at(std::size_t i) const { return items_.at(i); }
  const std::vector<Approximant>& approximants() const noexcept { return items_; }
  const std::optional<Element>& ambient() const noexcept { return ambient_; }

  // Appends count approximants; throws ApproximantsExhausted.
  void extend(std::size_t count);
  bool try_extend();
  // Makes at least n approximants available.
  void require(std::size_t n);

  // Strictly increasing values, pseudo-Cauchy law, agreement with the ambient
  // element and stable value/leading coefficient of the last two centres.
  // Throws InconsistentData.
  void check() const;

  std::string str() const;

 private:
  std::optional<Approximant> next_from_ambient() const;

  ModelPtr model_;
  std::vector<Approximant> items_;
  std::optional<Element> ambient_;
  std::vector<Value> support_;
};

// xi = sum_{i < terms} t^(1 - p^-i) over the perfect hull of F_p((t)),
// known up to precision 1 - p^-terms.
ApproximationType xi_stream(long p, long terms = 16);

using Evaluator = std::function<Element(const Element&)>;

struct StabilizationCertificate {
  std::string h;
  Value alpha0;
  Value stable_value;
  std::size_t first_index;      // first approximant of the stable run
  std::size_t checked_through;  // last approximant checked
};

StabilizationCertificate stabilize(ApproximationType& at, const Evaluator& h, const std::string& label,
                                   std::size_t confirmations = kDefaultConfirmations, bool constant = false);
StabilizationCertificate stabilize(ApproximationType& at, const Poly& h,
                                   std::size_t confirmations = kDefaultConfirmations);

enum class Relation { NotEqual, Greater, GreaterEq, Less };

// coef * gamma + offset (relation) 0
struct LinearConstraint {
  Rational coef;
  Value offset;
  Relation rel;
  std::string label;

  bool holds(const Value& gamma) const;
  std::string str() const;
};

struct CenterChoice {
  std::size_t index;
  Element c;
  Value gamma;
};

// First approximant with gamma >= threshold satisfying every constraint.
CenterChoice choose_center(ApproximationType& at, const std::vector<LinearConstraint>& constraints,
                           std::optional<Value> threshold = std::nullopt);

}  // namespace ramlab

#endif
