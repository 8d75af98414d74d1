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
#ifndef RAMLAB_KUMMER_HPP
#define RAMLAB_KUMMER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/approx.hpp"
#include "ramlab/ops.hpp"
#include "ramlab/poly.hpp"

namespace ramlab::kummer {

// s with s * u = 1 modulo terms of value >= modulus; coefficients of s are
// reduced to canonical digit form. u must be a 1-unit polynomial.
Poly geo_inverse(const Poly& u, const Value& modulus);

// ---- value simulator ------------------------------------------------------

// index i -> v(h_i(c)), all values > v(p)
struct ValueMonomialSystem {
  long p = 2;
  Value vp = Value(Rational(1));
  std::map<long, Value> entries;
  std::vector<std::string> history;

  std::size_t count() const { return entries.size(); }
  std::string str() const;
};

struct Contribution {
  long source;  // i * p^m
  long m;
  Value value;  // delta^m(v_source)
};

// Two contributions at the same target collide: the lower index is raised by
// Delta^-1 onto the higher one and the two monomials merge.
struct MergeEvent {
  long target;
  long low;
  long high;
  Value common;                 // the colliding folded value
  std::optional<Value> merged;  // value of the merged coefficient; nullopt if it vanished
};

// Supplies the value of the merged coefficient; the default keeps v_high.
using MergeResolver = std::function<std::optional<Value>(const MergeEvent&)>;

struct FoldResult {
  ValueMonomialSystem system;  // after all merges, before folding
  std::map<long, std::vector<Contribution>> contributions;
  std::map<long, Value> min_value;
  std::vector<MergeEvent> merges;
};

std::map<long, std::vector<Contribution>> contributions_of(const ValueMonomialSystem& sys);
std::optional<MergeEvent> find_collision(const ValueMonomialSystem& sys);
FoldResult value_sim_fold(ValueMonomialSystem sys, const MergeResolver& resolver = {});

struct TerminationReport {
  FoldResult result;
  std::size_t initial_count = 0;
  std::vector<std::size_t> counts;  // monomial count after each merge
  bool monotone = true;
};

TerminationReport value_sim_terminates(const ValueMonomialSystem& sys, const MergeResolver& resolver = {});

// ---- exact engine, p = 2 over 2-adic models --------------------------------

struct ChainEntry {
  std::string step;  // unit-factor, delete, merge, fold
  std::string detail;
  Witness witness;
};

struct MembershipCheck {
  std::size_t approximant;
  Witness witness;
  bool verified;
};

struct KummerShape {
  bool unit_z = false;
  bool maximal_ideal = false;
  bool deleted_above_bound = false;
  bool unique_least = false;
  std::vector<std::string> problems;
  bool ok() const { return unit_z && maximal_ideal && deleted_above_bound && unique_least; }
};

struct KummerTrace {
  ValueMonomialSystem initial;  // second case only
  std::vector<MergeEvent> merges;
  std::map<long, std::vector<Contribution>> contributions;
};

struct KummerNormalForm {
  Poly f;
  int kase = 0;  // 1, 2, or 0 for f = 0
  Element c;
  Element d;
  Value gamma;
  std::size_t center_index = 0;
  std::vector<Element> a{};  // a_0 .. a_n in z = (x - c)/d
  std::optional<long> i0{};
  std::vector<ChainEntry> chain{};
  std::size_t eval_index = 0;  // approximant at which the chain is evaluated
  std::vector<MembershipCheck> membership{};
  std::vector<StabilizationCertificate> stabilizations{};
  KummerTrace trace{};
  std::vector<std::string> strengthenings{};

  std::string g_str() const;
  bool chain_verified() const;
  bool membership_verified() const;
  KummerShape shape() const;
};

inline constexpr std::size_t kMembershipChecks = 3;

KummerNormalForm kummer_normal_form_p2(const Poly& f, ApproximationType& at,
                                       std::size_t confirmations = kDefaultConfirmations);

// Replays the exact run's initial value system through value_sim_fold, feeding
// it the merged values the exact run observed, and compares merge events and
// final contributions entry by entry. Empty string on agreement.
std::string trace_disagreement(const KummerNormalForm& nf);

// Second case on its own: 1 + h(x) with every coefficient of h of value
// > v(2) and a stream of units. Used when the merge loop needs direct input.
KummerNormalForm kummer_second_case_p2(const Poly& h, ApproximationType& at,
                                       std::size_t confirmations = kDefaultConfirmations);

}  // namespace ramlab::kummer

#endif
