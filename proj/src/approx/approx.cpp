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
#include "ramlab/approx.hpp"

#include <algorithm>
#include <sstream>

namespace ramlab {

namespace {

Element make_exact(const Element& x) {
  if (x.model()->kind() == ModelKind::Padic)
    return Element::padic(x.model(), x.padic_coeffs(), Value::infinity(1));
  return Element::series(x.model(), x.terms(), Value::infinity(x.model()->value_rank()));
}

std::vector<Value> support_of(const Element& xi) {
  std::vector<Value> s;
  const auto& m = xi.model();
  if (m->kind() != ModelKind::Padic) {
    for (const auto& [e, c] : xi.terms()) s.push_back(e);
    return s;
  }
  long p = m->p();
  int e = m->ramification();
  const auto& cs = xi.padic_coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Rational& q = cs[i];
    if (q == 0) continue;
    long v = padic_order(q, p);
    Rational scaled = q;
    for (long k = 0; k < (v < 0 ? -v : v); ++k) scaled = v < 0 ? Rational(scaled * p) : Rational(scaled / p);
    scaled.canonicalize();
    if (scaled.get_den() != 1 || scaled < 0)
      fail(ErrorCode::Precondition, "p-adic ambient element needs a finite precision to expand its digits");
    Integer n = scaled.get_num();
    for (long pos = v; n != 0; ++pos) {
      Integer d;
      mpz_fdiv_qr_ui(n.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
      if (d != 0) s.push_back(Value(Rational(pos) + make_rational(static_cast<long>(i), e)));
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool same_leading(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.value() == b.value() && a.leading_coefficient() == b.leading_coefficient();
}

}  // namespace

ApproximationType::ApproximationType(ModelPtr base, std::vector<Approximant> given)
    : model_(std::move(base)), items_(std::move(given)) {
  for (const auto& a : items_)
    if (!same_model(a.c.model(), model_)) fail(ErrorCode::ModelMismatch, "approximant from another model");
}

ApproximationType ApproximationType::from_ambient(ModelPtr base, Element ambient) {
  if (!same_model(ambient.model(), base)) fail(ErrorCode::ModelMismatch, "ambient element from another model");
  ApproximationType at(std::move(base));
  at.support_ = support_of(ambient);
  at.ambient_ = std::move(ambient);
  return at;
}

std::optional<Approximant> ApproximationType::next_from_ambient() const {
  if (!ambient_) return std::nullopt;
  std::size_t nu = items_.size() + 1;
  if (nu >= support_.size()) return std::nullopt;
  const Value& s = support_[nu];
  return Approximant{make_exact(ambient_->truncated(s)), s};
}

bool ApproximationType::try_extend() {
  auto next = next_from_ambient();
  if (!next) return false;
  items_.push_back(std::move(*next));
  return true;
}

void ApproximationType::extend(std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (!try_extend())
      fail(ErrorCode::ApproximantsExhausted,
           ambient_ ? "ambient precision " + ambient_->precision().str() + " exhausted after " +
                          std::to_string(items_.size()) + " approximants"
                    : "explicit stream has only " + std::to_string(items_.size()) + " approximants");
}

void ApproximationType::require(std::size_t n) {
  if (items_.size() < n) extend(n - items_.size());
}

void ApproximationType::check() const {
  for (std::size_t nu = 0; nu < items_.size(); ++nu) {
    const auto& cur = items_[nu];
    if (nu > 0 && !(items_[nu - 1].gamma < cur.gamma))
      fail(ErrorCode::InconsistentData, "values of x - c are not strictly increasing at " + std::to_string(nu + 1));
    for (std::size_t mu = 0; mu < nu; ++mu) {
      Element diff = cur.c - items_[mu].c;
      if (diff.is_zero() || diff.value() != items_[mu].gamma)
        fail(ErrorCode::InconsistentData, "pseudo-Cauchy law fails between approximants " + std::to_string(mu + 1) +
                                              " and " + std::to_string(nu + 1));
    }
    if (ambient_) {
      Element diff = *ambient_ - cur.c;
      if (diff.is_zero() || diff.value() != cur.gamma)
        fail(ErrorCode::InconsistentData, "approximant " + std::to_string(nu + 1) + " disagrees with the ambient element");
    }
  }
  std::size_t n = items_.size();
  if (n >= 2 && !same_leading(items_[n - 1].c, items_[n - 2].c))
    fail(ErrorCode::InconsistentData, "value or leading coefficient of the centres is not yet stable");
}

std::string ApproximationType::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < items_.size(); ++i)
    os << (i ? ", " : "") << "(" << items_[i].c.str() << ", " << items_[i].gamma.str() << ")";
  return os.str();
}

ApproximationType xi_stream(long p, long terms) {
  auto m = FieldModel::perfect_hull(p);
  Element::Terms t;
  Integer pk = 1;
  for (long i = 0; i < terms; ++i) {
    t.emplace(Value(Rational(1) - Rational(1) / Rational(pk)), 1);
    pk *= p;
  }
  Value prec(Rational(1) - Rational(1) / Rational(pk));
  return ApproximationType::from_ambient(m, Element::series(m, std::move(t), prec));
}

StabilizationCertificate stabilize(ApproximationType& at, const Evaluator& h, const std::string& label,
                                   std::size_t confirmations, bool constant) {
  if (confirmations == 0) confirmations = 1;
  std::vector<Value> vals;
  at.require(constant ? 1 : 2);
  while (true) {
    while (vals.size() < at.size()) {
      Element y = h(at.at(vals.size()).c);
      vals.push_back(y.value_known() ? y.value() : Value::infinity(at.model()->value_rank()));
    }
    std::size_t n = vals.size();
    std::size_t j = n - 1;
    if (constant) j = 0;
    else
      while (j > 0 && vals[j - 1] == vals[j]) --j;
    if (constant || n - j >= confirmations)
      return {label, at.at(j).gamma, vals[j], j, n - 1};
    if (!at.try_extend())
      fail(ErrorCode::ApproximantsExhausted,
           "value of " + label + " not confirmed " + std::to_string(confirmations) + " times within " +
               std::to_string(n) + " approximants");
  }
}

StabilizationCertificate stabilize(ApproximationType& at, const Poly& h, std::size_t confirmations) {
  return stabilize(at, [&](const Element& c) { return h.eval(c); }, h.str("X"), confirmations, h.degree() <= 0);
}

bool LinearConstraint::holds(const Value& gamma) const {
  Value lhs = gamma.scaled(coef) + offset;
  if (coef == 0) lhs = offset;
  Value zero(Rational(0));
  switch (rel) {
    case Relation::NotEqual: return lhs != zero;
    case Relation::Greater: return lhs > zero;
    case Relation::GreaterEq: return lhs >= zero;
    case Relation::Less: return lhs < zero;
  }
  return false;
}

std::string LinearConstraint::str() const {
  static const char* ops[] = {"!=", ">", ">=", "<"};
  return rational_str(coef) + "*g + " + offset.str() + " " + ops[static_cast<int>(rel)] + " 0";
}

CenterChoice choose_center(ApproximationType& at, const std::vector<LinearConstraint>& constraints,
                           std::optional<Value> threshold) {
  // interval implied by the order constraints; empty means contradictory
  std::optional<Rational> lo, hi;
  bool lo_strict = false;
  for (const auto& c : constraints) {
    if (c.offset.is_infinite()) fail(ErrorCode::Precondition, "constraint offset must be finite: " + c.label);
    if (c.coef == 0) {
      if (!c.holds(Value(Rational(0))))
        fail(ErrorCode::ContradictoryConstraints, "constraint " + c.label + " fails for every value");
      continue;
    }
    if (c.rel == Relation::NotEqual) continue;
    Rational root = -c.offset.q() / c.coef;
    bool upper = (c.rel == Relation::Less) == (c.coef > 0);
    bool strict = c.rel != Relation::GreaterEq;
    if (upper) {
      if (!hi || root < *hi) hi = root;
    } else if (!lo || root > *lo || (root == *lo && strict)) {
      lo = root;
      lo_strict = strict;
    }
  }
  if (lo && hi && (*hi < *lo || (*hi == *lo && lo_strict)))
    fail(ErrorCode::ContradictoryConstraints, "order constraints leave no admissible value");
  at.require(1);
  for (std::size_t i = 0;; ++i) {
    if (i >= at.size() && !at.try_extend())
      fail(ErrorCode::ApproximantsExhausted, "no approximant among " + std::to_string(at.size()) +
                                                  " satisfies the centre constraints");
    const auto& a = at.at(i);
    if (threshold && a.gamma < *threshold) continue;
    bool ok = true;
    for (const auto& c : constraints)
      if (!c.holds(a.gamma)) {
        ok = false;
        break;
      }
    if (ok) return {i, a.c, a.gamma};
  }
}

}  // namespace ramlab
