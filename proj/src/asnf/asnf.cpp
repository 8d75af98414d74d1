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
#include "ramlab/asnf.hpp"

#include <algorithm>
#include <sstream>

namespace ramlab::asnf {

namespace {

void require_char_p(const ModelPtr& m, const char* what) {
  if (m->characteristic() == 0) fail(ErrorCode::ModelMismatch, std::string(what) + " needs a characteristic-p model");
}

Poly power_of_linear(const Element& c, long k) {
  const auto& m = c.model();
  return Poly(m, {-c, Element::one(m)}).pow(static_cast<unsigned long>(k));
}

Value zero_like(const Value& v) { return v.rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0)); }

// evaluator for b(X0)^(p^lambda), which is an ordinary polynomial in X0
Evaluator power_evaluator(const PuiseuxPoly& b, long lambda) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(b.model()->p()), static_cast<unsigned long>(lambda));
  unsigned long e = q.get_ui();
  return [b, e](const Element& c) { return b.eval(c).pow(e); };
}

Value p_power(long p, long lambda) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(lambda));
  return Value(Rational(q));
}

}  // namespace

Element wp(const Element& a) {
  require_char_p(a.model(), "wp");
  return a.pow(static_cast<unsigned long>(a.model()->p())) - a;
}

Poly wp(const Poly& f) {
  require_char_p(f.model(), "wp");
  return f.frobenius() - f;
}

std::vector<Poly> hasse_taylor(const Poly& f) {
  const auto& m = f.model();
  std::vector<Poly> out;
  int n = f.degree();
  for (int i = 0; i <= n; ++i) {
    std::vector<Element> c;
    for (int k = i; k <= n; ++k)
      c.push_back(f.coeffs()[k] * Element::from_integer(m, binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i))));
    out.emplace_back(m, std::move(c));
  }
  return out;
}

FoldedTaylor fold_p_indices(const std::vector<Poly>& taylor) {
  if (taylor.empty()) fail(ErrorCode::Precondition, "empty Taylor expansion");
  const auto& m = taylor.front().model();
  require_char_p(m, "folding");
  if (!m->is_perfect()) fail(ErrorCode::NotPDivisible, "folding needs a perfect coefficient model");
  long p = m->p();
  FoldedTaylor out{{}, PuiseuxPoly(m), {}, PuiseuxPoly(m)};
  long n = static_cast<long>(taylor.size()) - 1;
  std::vector<PuiseuxPoly> work;
  for (const auto& t : taylor) work.push_back(PuiseuxPoly::from_poly(t));
  for (long i = n; i >= 1; --i) {
    if (i % p != 0 || work[i].is_zero()) continue;
    // a Y^(pj) = wp(a^(1/p) Y^j) + a^(1/p) Y^j
    PuiseuxPoly r = work[i].frobenius_root();
    long j = i / p;
    auto it = out.witness.emplace(j, PuiseuxPoly(m)).first;
    it->second = it->second + r;
    work[j] = work[j] + r;
    work[i] = PuiseuxPoly(m);
  }
  for (long j = 1; j <= n; ++j)
    if (j % p != 0 && !work[j].is_zero()) out.b.emplace(j, work[j]);
  for (auto it = out.witness.begin(); it != out.witness.end();)
    it = it->second.is_zero() ? out.witness.erase(it) : std::next(it);
  for (const auto& [e, a] : work[0].terms()) {
    Integer k = e.get_num();
    Element coeff = a;
    while (k > 0 && k % p == 0) {
      coeff = coeff.frobenius_root();
      k /= p;
      out.witness_constant.add_term(Rational(k), coeff);
    }
    out.constant.add_term(Rational(k), coeff);
  }
  return out;
}

Poly ASNormalForm::g_in_x() const {
  Poly z = Poly::linear(c, d);
  Poly g(f.model());
  Poly zk = Poly::constant(Element::one(f.model()));
  for (const auto& ai : a) {
    g += zk.scaled(ai);
    zk = zk * z;
  }
  return g;
}

std::string ASNormalForm::g_str() const { return Poly(f.model(), a).str("z"); }

Poly ASNormalForm::identity_residual() const {
  Poly r = f - g_in_x() - wp(witness);
  for (const auto& t : absorbed) r -= t.term;
  return r;
}

ShapeReport ASNormalForm::shape(long p) const {
  ShapeReport s;
  s.unit_z = !d.is_zero() && d.value() == gamma;
  if (!s.unit_z) s.problems.push_back("v(x - c) != v(d)");
  s.negative_values = s.p_free_indices = s.distinct_values = true;
  std::vector<Value> seen;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    Value v = a[i].value();
    if (!(v < zero_like(v))) {
      s.negative_values = false;
      s.problems.push_back("a_" + std::to_string(i) + " has value " + v.str() + " >= 0");
    }
    if (static_cast<long>(i) % p == 0) {
      s.p_free_indices = false;
      s.problems.push_back("a_" + std::to_string(i) + " is nonzero at an index divisible by p");
    }
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
      s.distinct_values = false;
      s.problems.push_back("value " + v.str() + " repeats");
    }
    seen.push_back(v);
  }
  return s;
}

bool ASNormalForm::absorption_verified() const {
  for (const auto& t : absorbed) {
    if (t.checks.size() < kAbsorptionChecks) return false;
    for (const auto& c : t.checks)
      if (!c.verified) return false;
  }
  return true;
}

ASNormalForm as_normal_form(const Poly& f, ApproximationType& at, std::size_t confirmations) {
  const auto& m = f.model();
  require_char_p(m, "Artin-Schreier normal form");
  if (!same_model(m, at.model())) fail(ErrorCode::ModelMismatch, "polynomial and stream live in different models");
  if (!f.is_exact()) fail(ErrorCode::Precondition, "normal form needs exact coefficients");
  long p = m->p();
  at.require(1);
  if (f.is_zero()) {
    const auto& first = at.at(0);
    return ASNormalForm{f, first.c, Element::of_value(m, first.gamma), first.gamma, 0, {}, std::nullopt,
                        Poly(m), {}, {}, {}};
  }
  FoldedTaylor folded = fold_p_indices(hasse_taylor(f));

  std::vector<StabilizationCertificate> certs;
  std::map<long, Value> beta;
  std::optional<Value> threshold;
  auto stable_value = [&](const PuiseuxPoly& b, const std::string& name) {
    long lambda = b.integrality_exponent();
    std::string label = "(" + b.str("X0") + ")^(" + std::to_string(p) + "^" + std::to_string(lambda) + ")";
    auto cert = stabilize(at, power_evaluator(b, lambda), label, confirmations, b.terms().size() == 1 && b.terms().begin()->first == 0);
    cert.h = name + " = " + label;
    if (cert.stable_value.is_infinite()) fail(ErrorCode::CertificationFailed, name + " vanishes along the stream");
    Value v = cert.stable_value.scaled(Rational(1) / p_power(p, lambda).q());
    threshold = threshold ? max(*threshold, cert.alpha0) : cert.alpha0;
    certs.push_back(cert);
    return v;
  };
  for (const auto& [j, b] : folded.b) beta.emplace(j, stable_value(b, "b_" + std::to_string(j)));
  std::optional<Value> alpha_const;
  if (!folded.constant.is_zero()) alpha_const = stable_value(folded.constant, "a_0");

  std::vector<LinearConstraint> cs;
  for (auto it = beta.begin(); it != beta.end(); ++it) {
    auto [j, bj] = *it;
    std::string tag = "beta_" + std::to_string(j) + " + " + std::to_string(j) + "g";
    cs.push_back({Rational(j), bj, Relation::NotEqual, tag + " != 0"});
    if (alpha_const) cs.push_back({Rational(j), bj - *alpha_const, Relation::NotEqual, tag + " != v(a_0)"});
    for (auto jt = std::next(it); jt != beta.end(); ++jt) {
      auto [k, bk] = *jt;
      cs.push_back({Rational(j - k), bj - bk, Relation::NotEqual,
                    tag + " != beta_" + std::to_string(k) + " + " + std::to_string(k) + "g"});
    }
  }
  CenterChoice center = choose_center(at, cs, threshold);
  const Element& c = center.c;
  Element d = Element::of_value(m, center.gamma);

  ASNormalForm nf{f, c, d, center.gamma, center.index, {}, std::nullopt, Poly(m), {}, std::move(certs), cs};
  long n = f.degree();
  nf.a.assign(static_cast<std::size_t>(n) + 1, Element::zero(m));
  nf.a[0] = folded.constant.eval(c);
  if (alpha_const && nf.a[0].value() != *alpha_const)
    fail(ErrorCode::CertificationFailed, "v(a_0) at the centre differs from its stabilized value");
  Poly z = Poly::linear(c, d);
  Element dj = Element::one(m);
  for (long j = 1; j <= n; ++j) {
    dj = dj * d;
    auto it = folded.b.find(j);
    if (it == folded.b.end()) continue;
    Element bj = it->second.eval(c);
    if (bj.value() != beta.at(j))
      fail(ErrorCode::CertificationFailed, "v(b_" + std::to_string(j) + "(c)) differs from its stabilized value");
    Element B = bj * dj;
    if (B.value() < zero_like(B.value())) {
      nf.a[static_cast<std::size_t>(j)] = B;
    } else {
      nf.absorbed.push_back({j, B, z.pow(static_cast<unsigned long>(j)).scaled(B), {}});
    }
  }
  while (nf.a.size() > 1 && nf.a.back().is_zero()) nf.a.pop_back();
  if (nf.a.size() == 1 && nf.a[0].is_zero()) nf.a.clear();

  Poly W = Poly::constant(folded.witness_constant.eval(c));
  for (const auto& [k, w] : folded.witness) W += power_of_linear(c, k).scaled(w.eval(c));
  nf.witness = W;

  std::vector<std::optional<Value>> vals;
  for (std::size_t i = 1; i < nf.a.size(); ++i)
    vals.push_back(nf.a[i].is_zero() ? std::nullopt : std::optional<Value>(nf.a[i].value()));
  auto crit = generator_criterion(vals, p);
  if (crit.i0) nf.i0 = crit.i0;
  else if (!vals.empty()) {
    // least value not at a p-free index or not unique: still report the first least index
    std::optional<Value> least;
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] && (!least || *vals[i] < *least)) {
        least = vals[i];
        nf.i0 = static_cast<long>(i) + 1;
      }
  }

  if (!nf.absorbed.empty()) {
    at.require(center.index + 1 + kAbsorptionChecks);
    Poly X = Poly::variable(m);
    for (auto& t : nf.absorbed) {
      for (std::size_t k = 1; k <= kAbsorptionChecks; ++k) {
        std::size_t nu = center.index + k;
        Element mv = t.term.eval(at.at(nu).c);
        Poly eq = X.pow(static_cast<unsigned long>(p)) - X - Poly::constant(mv);
        Element u = hensel_lift(eq, 0, mv.value() + Value::of(4));
        auto w = Witness::wp_preimage("u^p - u = " + mv.str(), mv, u);
        t.checks.push_back({nu, w, w.verify()});
      }
    }
  }
  return nf;
}

CriterionResult generator_criterion(const std::vector<std::optional<Value>>& values, long p) {
  std::optional<Value> least;
  for (const auto& v : values)
    if (v && (!least || *v < *least)) least = v;
  if (!least) return {false, std::nullopt, "no nonzero coefficient of positive degree"};
  std::vector<long> at_least;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] && *values[i] == *least) at_least.push_back(static_cast<long>(i) + 1);
  if (at_least.size() > 1) {
    std::ostringstream os;
    os << "least value " << least->str() << " is not unique (indices";
    for (long i : at_least) os << " " << i;
    os << ")";
    return {false, std::nullopt, os.str()};
  }
  long i0 = at_least.front();
  if (i0 % p == 0)
    return {false, std::nullopt, "no index prime to p carries the least value (least at index " + std::to_string(i0) + ")"};
  return {true, i0, ""};
}

CriterionResult generator_criterion(const ASNormalForm& nf, long p) {
  std::vector<std::optional<Value>> vals;
  for (std::size_t i = 1; i < nf.a.size(); ++i)
    vals.push_back(nf.a[i].is_zero() ? std::nullopt : std::optional<Value>(nf.a[i].value()));
  return generator_criterion(vals, p);
}

DegreePReduction reduce_degree_p_extension(const Poly& f, ApproximationType& at, std::size_t confirmations) {
  long p = f.model()->p();
  DegreePReduction r{false, as_normal_form(f, at, confirmations), {}, ""};
  bool constant = r.nf.a.size() <= 1;
  if (constant) {
    r.degenerate = true;
    r.criterion = {false, std::nullopt, "g is constant"};
    r.statement = "f(x) = g + wp(W) + absorbed with constant g = " + r.nf.g_str() +
                  "; the Artin-Schreier extension is defined over K";
    return r;
  }
  r.criterion = generator_criterion(r.nf, p);
  if (r.criterion.holds)
    r.statement = "theta' = theta - W (up to the absorbed Hensel roots) satisfies wp(theta') = g(z) = " +
                  r.nf.g_str() + "; a_" + std::to_string(*r.criterion.i0) +
                  " is the unique coefficient of least value and p does not divide its index";
  else
    r.statement = "generator criterion fails: " + r.criterion.reason;
  return r;
}

}  // namespace ramlab::asnf
