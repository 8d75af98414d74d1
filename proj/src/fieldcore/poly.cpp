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
#include "ramlab/poly.hpp"

#include <sstream>

namespace ramlab {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Poly::Poly(ModelPtr m, std::vector<Element> coeffs) : model_(std::move(m)), c_(std::move(coeffs)) {
  for (const auto& x : c_)
    if (!same_model(x.model(), model_)) fail(ErrorCode::ModelMismatch, "polynomial coefficient from another model");
  trim();
}

Poly Poly::constant(const Element& a) { return Poly(a.model(), {a}); }

Poly Poly::variable(const ModelPtr& m) { return Poly(m, {Element::zero(m), Element::one(m)}); }

Poly Poly::monomial(const Element& a, std::size_t k) {
  std::vector<Element> c(k + 1, Element::zero(a.model()));
  c[k] = a;
  return Poly(a.model(), std::move(c));
}

Poly Poly::linear(const Element& c, const Element& d) {
  auto inv = d.inverse();
  return Poly(c.model(), {-(c * inv), inv});
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero() && c_.back().is_exact()) c_.pop_back();
}

Element Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Element::zero(model_); }

bool Poly::is_exact() const {
  for (const auto& x : c_)
    if (!x.is_exact()) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  if (!same_model(model_, o.model_)) fail(ErrorCode::ModelMismatch, "polynomials over different models");
  std::vector<Element> r;
  std::size_t n = std::max(c_.size(), o.c_.size());
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
  return Poly(model_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Element> r;
  for (const auto& x : c_) r.push_back(-x);
  return Poly(model_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!same_model(model_, o.model_)) fail(ErrorCode::ModelMismatch, "polynomials over different models");
  if (c_.empty() || o.c_.empty()) return Poly(model_);
  std::vector<Element> r(c_.size() + o.c_.size() - 1, Element::zero(model_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero() && c_[i].is_exact()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(model_, std::move(r));
}

Poly Poly::scaled(const Element& a) const {
  std::vector<Element> r;
  for (const auto& x : c_) r.push_back(x * a);
  return Poly(model_, std::move(r));
}

Poly Poly::pow(unsigned long n) const {
  Poly result = constant(Element::one(model_));
  Poly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Element Poly::eval(const Element& x) const {
  if (c_.empty()) return Element::zero(model_);
  Element r = c_.back();
  for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
  return r;
}

std::vector<Element> Poly::taylor_at(const Element& c) const {
  // repeated synthetic division by (X - c)
  std::vector<Element> b = c_;
  std::size_t n = b.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) b[j] = b[j] + c * b[j + 1];
  return b;
}

Poly Poly::substitute_linear(const Element& c, const Element& d) const {
  auto t = taylor_at(c);
  Element dk = Element::one(model_);
  for (auto& x : t) {
    x = x * dk;
    dk = dk * d;
  }
  return Poly(model_, std::move(t));
}

Poly Poly::derivative() const {
  std::vector<Element> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Element::from_integer(model_, static_cast<long>(i)));
  return Poly(model_, std::move(r));
}

Poly Poly::truncated(const Value& prec) const {
  std::vector<Element> r;
  for (const auto& x : c_) r.push_back(x.truncated(prec));
  return Poly(model_, std::move(r));
}

Poly Poly::frobenius() const {
  long p = model_->characteristic();
  if (p == 0) fail(ErrorCode::ModelMismatch, "Frobenius needs characteristic p");
  if (c_.empty()) return *this;
  std::vector<Element> r((c_.size() - 1) * static_cast<std::size_t>(p) + 1, Element::zero(model_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(p)] = c_[i].frobenius();
  return Poly(model_, std::move(r));
}

bool Poly::identical(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].identical(o.c_[i])) return false;
  return true;
}

namespace {

std::string coeff_str(const Element& a, bool wrap) {
  std::string s = a.str(false);
  if (wrap && s.find(" + ") != std::string::npos) return "(" + s + ")";
  return s;
}

std::string power_str(const std::string& var, const Rational& e) {
  if (e == 1) return var;
  std::string es = rational_str(e);
  if (e.get_den() != 1 || e < 0) es = "(" + es + ")";
  return var + "^" + es;
}

void append_term(std::ostringstream& os, bool& first, const Element& a, const std::string& var, const Rational& e) {
  if (!first) os << " + ";
  first = false;
  if (e == 0) {
    os << coeff_str(a, false);
    return;
  }
  std::string cs = coeff_str(a, true);
  if (cs != "1") os << cs << "*";
  os << power_str(var, e);
}

}  // namespace

std::string Poly::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    append_term(os, first, c_[i], var, Rational(static_cast<long>(i)));
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- PuiseuxPoly

PuiseuxPoly PuiseuxPoly::from_poly(const Poly& f) {
  PuiseuxPoly r(f.model());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.add_term(Rational(static_cast<long>(i)), f.coeffs()[i]);
  return r;
}

void PuiseuxPoly::add_term(const Rational& exponent, const Element& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PuiseuxPoly PuiseuxPoly::operator+(const PuiseuxPoly& o) const {
  PuiseuxPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

PuiseuxPoly PuiseuxPoly::operator*(const PuiseuxPoly& o) const {
  PuiseuxPoly r(model_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

PuiseuxPoly PuiseuxPoly::frobenius() const {
  PuiseuxPoly r(model_);
  Rational p(model_->p());
  for (const auto& [e, c] : terms_) r.add_term(e * p, c.frobenius());
  return r;
}

PuiseuxPoly PuiseuxPoly::frobenius_root() const {
  PuiseuxPoly r(model_);
  Rational p(model_->p());
  for (const auto& [e, c] : terms_) {
    Rational ne = e / p;
    ne.canonicalize();
    r.add_term(ne, c.frobenius_root());
  }
  return r;
}

long PuiseuxPoly::integrality_exponent() const {
  long lambda = 0;
  long p = model_->p();
  for (const auto& [e, c] : terms_) {
    Integer den = e.get_den();
    long k = 0;
    while (den % p == 0) {
      den /= p;
      ++k;
    }
    if (den != 1) fail(ErrorCode::NotPDivisible, "exponent " + rational_str(e) + " is not in Z[1/p]");
    lambda = std::max(lambda, k);
  }
  return lambda;
}

Poly PuiseuxPoly::to_poly() const {
  std::vector<Element> c;
  for (const auto& [e, a] : terms_) {
    if (e.get_den() != 1 || e < 0) fail(ErrorCode::Precondition, "exponent " + rational_str(e) + " is not a degree");
    std::size_t k = e.get_num().get_ui();
    if (c.size() <= k) c.resize(k + 1, Element::zero(model_));
    c[k] = c[k] + a;
  }
  return Poly(model_, std::move(c));
}

Element PuiseuxPoly::eval(const Element& x) const {
  Element r = Element::zero(model_);
  long p = model_->p();
  std::map<long, Element> roots;  // k -> x^(1/p^k)
  roots.emplace(0, x);
  for (const auto& [e, a] : terms_) {
    Integer den = e.get_den();
    long k = 0;
    while (den % p == 0) {
      den /= p;
      ++k;
    }
    if (den != 1) fail(ErrorCode::NotPDivisible, "exponent " + rational_str(e) + " is not in Z[1/p]");
    auto it = roots.find(k);
    if (it == roots.end()) {
      Element y = x;
      for (long i = 0; i < k; ++i) y = y.frobenius_root();
      it = roots.emplace(k, y).first;
    }
    Integer num = e.get_num();
    Element base = it->second;
    if (num < 0) {
      base = base.inverse();
      num = -num;
    }
    r = r + a * base.pow(num.get_ui());
  }
  return r;
}

std::string PuiseuxPoly::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, a] : terms_) append_term(os, first, a, var, e);
  if (first) os << "0";
  return os.str();
}

}  // namespace ramlab
