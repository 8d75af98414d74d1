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
#ifndef RAMLAB_ASNF_HPP
#define RAMLAB_ASNF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/approx.hpp"
#include "ramlab/ops.hpp"
#include "ramlab/poly.hpp"

namespace ramlab::asnf {

// wp(X) = X^p - X
Element wp(const Element& a);
Poly wp(const Poly& f);

// f(X) = sum_i f_i(X0) (X - X0)^i; entry i is f_i as a polynomial in X0.
std::vector<Poly> hasse_taylor(const Poly& f);

// Taylor data after moving every index divisible by p down to its p-free
// part. Over a perfect field, with Y = X - X0,
//   f(X) = constant(X0) + sum_j b[j](X0) Y^j + wp(W)
//   W    = witness_constant(X0) + sum_k witness[k](X0) Y^k.
// Monomials a X0^k (p | k, k > 0) of the constant term are folded the same way.
struct FoldedTaylor {
  std::map<long, PuiseuxPoly> b;
  PuiseuxPoly constant;
  std::map<long, PuiseuxPoly> witness;
  PuiseuxPoly witness_constant;
};

FoldedTaylor fold_p_indices(const std::vector<Poly>& taylor);

// Certificate that m lies in wp(K(x)^h) at one approximant: u^p - u = m(c_nu).
struct AbsorptionCheck {
  std::size_t approximant;
  Witness witness;
  bool verified;
};

struct AbsorbedTerm {
  long index;
  Element coeff;  // B_j, the coefficient of z^j
  Poly term;      // B_j z^j as a polynomial in x
  std::vector<AbsorptionCheck> checks;
};

struct ShapeReport {
  bool unit_z = false;
  bool negative_values = false;
  bool p_free_indices = false;
  bool distinct_values = false;
  std::vector<std::string> problems;
  bool ok() const { return unit_z && negative_values && p_free_indices && distinct_values; }
};

struct ASNormalForm {
  Poly f;
  Element c;
  Element d;
  Value gamma;  // v(x - c)
  std::size_t center_index;
  std::vector<Element> a;  // a_0 .. a_n, coefficients in z
  std::optional<long> i0;
  Poly witness;  // W as a polynomial in x
  std::vector<AbsorbedTerm> absorbed;
  std::vector<StabilizationCertificate> stabilizations;
  std::vector<LinearConstraint> constraints;

  // g((x - c)/d) as a polynomial in x
  Poly g_in_x() const;
  std::string g_str() const;
  // f - g(z) - wp(W) - sum absorbed, expanded in x
  Poly identity_residual() const;
  bool identity_holds() const { return identity_residual().is_zero(); }
  ShapeReport shape(long p) const;
  bool absorption_verified() const;
};

// Number of approximants past the centre at which absorbed terms are certified.
inline constexpr std::size_t kAbsorptionChecks = 3;

ASNormalForm as_normal_form(const Poly& f, ApproximationType& at,
                            std::size_t confirmations = kDefaultConfirmations);

struct CriterionResult {
  bool holds = false;
  std::optional<long> i0;
  std::string reason;
};

// coefficient values for indices 1..n; nullopt marks a zero coefficient
CriterionResult generator_criterion(const std::vector<std::optional<Value>>& values, long p);
CriterionResult generator_criterion(const ASNormalForm& nf, long p);

struct DegreePReduction {
  bool degenerate = false;
  ASNormalForm nf;
  CriterionResult criterion;
  std::string statement;
};

DegreePReduction reduce_degree_p_extension(const Poly& f, ApproximationType& at,
                                           std::size_t confirmations = kDefaultConfirmations);

}  // namespace ramlab::asnf

#endif
