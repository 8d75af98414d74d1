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
#ifndef RAMLAB_EXTCHECK_HPP
#define RAMLAB_EXTCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramlab/field.hpp"
#include "ramlab/poly.hpp"

namespace ramlab::ext {

// e = (vE : vK), f = [Ev : Kv], defect = degree / (e f).
struct ExtensionInvariants {
  long degree = 1;
  long e = 1;
  long f = 1;
  long defect = 1;
  long p = 0;  // residue characteristic
  bool te1 = true;
  bool te2 = true;
  bool te3 = true;
  std::string rule;

  bool tame() const { return te1 && te2 && te3; }
};

// Value and residue data for generators the rules below cannot handle.
struct DeclaredData {
  long e = 1;
  long f = 1;
  bool residue_separable = true;
};

struct ExtensionSpec {
  ModelPtr base;
  Poly minpoly;
  std::optional<DeclaredData> declared;
};

// Rules, in order: degree 1; declared data; Artin-Schreier X^p - X - a in
// characteristic p; single-slope Newton polygon whose slope has order n
// modulo vK (e = n); integral minpoly with irreducible reduction (f = n).
// Throws Unsupported when no rule applies, Precondition for a reducible
// minpoly and InconsistentData when declared data break Ostrowski.
ExtensionInvariants extension_invariants(const ExtensionSpec& spec);

// TE1: p does not divide e; TE2: separable residue extension; TE3: no defect.
bool tame_check(const ExtensionInvariants& inv, long p);

struct HenselVerdict {
  bool holds = false;
  std::string reason;
};

// h monic; true iff h has integral coefficients and the residue eta is a
// simple root of the reduction of h.
HenselVerdict henselian_element_test(const Poly& h, Element::Coeff eta_residue);

// ---- composite places on L = F_q((u))((t)) --------------------------------
// Q1 is the t-adic place with residue field F_q((u)); Q2 is u-adic on it.

struct CompositeStep {
  enum class Kind { Trivial, ConstantField, TRoot, URoot };
  Kind kind = Kind::Trivial;
  long degree = 1;  // [F_q^k : F_q], or n for t^(1/n), u^(1/n)

  std::string str() const;
};

struct ImmediacyVerdict {
  bool immediate = true;
  std::string reason;
};

// L' = L adjoined the listed steps. Direct: value group and residue field of
// the composite valuation P = Q1 Q2.
ImmediacyVerdict composite_immediate_check(const ModelPtr& L, const std::vector<CompositeStep>& steps);
// Layerwise: v_Q1 L' = v_Q1 L, then immediacy of (L'Q1 | LQ1, Q2).
ImmediacyVerdict layerwise_immediate_check(const ModelPtr& L, const std::vector<CompositeStep>& steps);

// ---- catalogs ---------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  ExtensionSpec spec;
  // hand-derived expectations
  long e, f, defect;
  bool te1, te2, te3;
};

std::vector<CatalogEntry> extension_catalog();

struct CompositeEntry {
  std::string name;
  ModelPtr L;
  std::vector<CompositeStep> steps;
};

std::vector<CompositeEntry> composite_catalog();

// Two-step towers F_q((t)) -> F_q^k1((t^(1/n1))) -> F_q^(k1 k2)((t^(1/(n1 n2)))).
// Each step is classified from its own minimal polynomial; the whole tower
// from its value group index and residue degree.
struct TowerCheck {
  std::string name;
  ExtensionInvariants first, second, whole;
  bool multiplicative() const;
};

std::vector<TowerCheck> tower_checks(long p);

}  // namespace ramlab::ext

#endif
