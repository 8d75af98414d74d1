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
#ifndef RAMLAB_OPS_HPP
#define RAMLAB_OPS_HPP

#include <optional>
#include <string>
#include <utility>

#include "ramlab/field.hpp"
#include "ramlab/poly.hpp"

namespace ramlab {

// Working precision used when an exact input has a non-terminating answer and
// the caller did not ask for a specific one.
inline constexpr long kDefaultWorkingPrecision = 32;

enum class WitnessKind { PthPower, WpPreimage, UnitFactor };

std::string_view to_string(WitnessKind k);

// Certificate for a membership claim.
//   PthPower, UnitFactor:  lhs = rhs * root^p
//   WpPreimage:            root^p - root = lhs
struct Witness {
  WitnessKind kind;
  std::string claim;
  Element lhs;
  Element rhs;
  Element root;

  static Witness pth_power(std::string claim, Element lhs, Element rhs, Element root);
  static Witness wp_preimage(std::string claim, Element m, Element u);

  // The defining identity, evaluated with precision tracking.
  Element defect() const;
  bool verify() const { return defect().is_zero(); }
  // Precision at which the identity was checked.
  Value checked_precision() const { return defect().precision(); }
};

// p-th root. Characteristic p: coefficientwise Frobenius inverse (needs a
// p-divisible exponent group). p-adic: Hensel lift of the least root mod p^2,
// so square roots of 2-adic units are = 1 mod 4. Exact rational p-th powers
// get their exact rational root.
Element pth_root(const Element& a, std::optional<Value> target = std::nullopt);

enum class PowerVerdict { Yes, No, Insufficient };
std::string_view to_string(PowerVerdict v);

struct PthPowerResult {
  PowerVerdict verdict;
  std::optional<Element> root;
  std::string reason;
};

PthPowerResult is_pth_power(const Element& a, std::optional<Value> target = std::nullopt);

// Newton iteration from the simple residue root r0 of f.
Element hensel_lift(const Poly& f, Element::Coeff r0, const Value& target);

// Shifts inside p-th power classes of 1-units (p = 2 over the 2-adics):
//   a)  1 + b in (1 + b + c) K^p       if v(c) > p/(p-1) v(p)
//   b)  1 + b in (1 + b + c) K^p       if 1 + c = s^p and v(bc) > p/(p-1) v(p)
//   c)  1 + b - pc in (1 + b + c^p) K^p if v(b) >= v(p)/(p-1) and v(c^p) > v(p)
Witness one_unit_shift_a(const Element& b, const Element& c, std::optional<Value> target = std::nullopt);
Witness one_unit_shift_b(const Element& b, const Element& c, const Element& s,
                         std::optional<Value> target = std::nullopt);
Witness one_unit_shift_c(const Element& b, const Element& c, std::optional<Value> target = std::nullopt);

// Delta^-1(d) = (-d/p)^p together with the class witness
// (1 + b + d) = (1 + b + Delta^-1(d)) * r^p.
std::pair<Element, Witness> rewrite_delta_inverse(const Element& b, const Element& d,
                                                  std::optional<Value> target = std::nullopt);

}  // namespace ramlab

#endif
