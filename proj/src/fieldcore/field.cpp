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
#include "ramlab/field.hpp"
#include "ramlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ramlab {

namespace {

Rational pow_p(long p, long n) {
  Integer pp;
  mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n < 0 ? -n : n));
  if (n >= 0) return Rational(pp);
  Rational r(1, 1);
  r /= pp;
  r.canonicalize();
  return r;
}

long integer_order(const Integer& n, long p) {
  if (n == 0) return 0;
  Integer m = n;
  Integer pp = p;
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
}

long ceil_rational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

// c reduced modulo p^n to its canonical representative p^v * [0, p^(n-v)).
Rational reduce_mod_power(const Rational& c, long n, long p) {
  if (c == 0) return Rational(0);
  long v = padic_order(c, p);
  if (v >= n) return Rational(0);
  Rational u = c / pow_p(p, v);
  u.canonicalize();
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n - v));
  Integer den_inv;
  Integer den = u.get_den();
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer r = u.get_num() * den_inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  Rational out = Rational(r) * pow_p(p, v);
  out.canonicalize();
  return out;
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

// quotient and remainder over Q
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& m) {
  qtrim(a);
  QPoly q;
  int dm = static_cast<int>(m.size()) - 1;
  if (static_cast<int>(a.size()) - 1 >= dm) q.assign(a.size() - m.size() + 1, Rational(0));
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    Rational f = a.back() / m.back();
    q[da - dm] = f;
    for (int j = 0; j <= dm; ++j) a[da - dm + j] -= f * m[j];
    a.pop_back();
    qtrim(a);
  }
  qtrim(q);
  return {q, a};
}

// inverse of a modulo m over Q via the extended Euclidean algorithm
QPoly qinvmod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  qtrim(r1);
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) fail(ErrorCode::Precondition, "element is not invertible");
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return qdivmod(s1, m).second;
}

std::string exponent_str(const Rational& e) { return rational_str(e); }

}  // namespace

long padic_order(const Rational& q, long p) {
  if (q == 0) fail(ErrorCode::Precondition, "p-adic order of zero");
  return integer_order(q.get_num(), p) - integer_order(q.get_den(), p);
}

// ---------------------------------------------------------------- FieldModel

ModelPtr FieldModel::series(long p, int k, ordval::GroupDescriptor exponents) {
  if (exponents.rank != 1) fail(ErrorCode::RankMismatch, "series model needs a rank-1 exponent group");
  auto* m = new FieldModel();
  m->kind_ = ModelKind::Series;
  m->p_ = p;
  m->residue_ = FiniteField::get(p, k);
  m->group_ = exponents;
  return ModelPtr(m);
}

ModelPtr FieldModel::perfect_hull(long p, int k) {
  return series(p, k, ordval::GroupDescriptor::p_divisible(p));
}

ModelPtr FieldModel::padic(long p, std::vector<Integer> eisenstein) {
  auto* m = new FieldModel();
  m->kind_ = ModelKind::Padic;
  m->p_ = p;
  m->residue_ = FiniteField::get(p, 1);
  if (!eisenstein.empty()) {
    int e = static_cast<int>(eisenstein.size()) - 1;
    if (e < 1 || eisenstein.back() != 1)
      fail(ErrorCode::Precondition, "Eisenstein polynomial must be monic of degree >= 1");
    for (int i = 0; i < e; ++i)
      if (eisenstein[i] % p != 0) fail(ErrorCode::Precondition, "polynomial is not Eisenstein");
    Integer sq = Integer(p) * p;
    if (eisenstein[0] % sq == 0) fail(ErrorCode::Precondition, "polynomial is not Eisenstein");
    if (e == 1) eisenstein.clear();
    else m->e_ = e;
  }
  m->eisenstein_ = std::move(eisenstein);
  m->group_ = ordval::GroupDescriptor::integers();
  m->group_.coords[0].denominator = m->e_;
  return ModelPtr(m);
}

ModelPtr FieldModel::iterated(long p, int k, ordval::GroupCoordinate t_group,
                              ordval::GroupCoordinate u_group) {
  auto* m = new FieldModel();
  m->kind_ = ModelKind::IteratedSeries;
  m->p_ = p;
  m->residue_ = FiniteField::get(p, k);
  m->group_ = ordval::GroupDescriptor::lex(t_group, u_group);
  return ModelPtr(m);
}

bool FieldModel::is_perfect() const {
  if (kind_ == ModelKind::Padic) return true;
  return group_.is_p_divisible(p_);
}

Value FieldModel::vp() const {
  if (kind_ == ModelKind::Padic) return Value(Rational(1));
  return Value::infinity(group_.rank);
}

std::string FieldModel::str() const {
  std::ostringstream os;
  switch (kind_) {
    case ModelKind::Series:
      os << "F_" << residue_->order() << "((t)) exponents " << group_.str();
      break;
    case ModelKind::Padic:
      os << "Q_" << p_;
      if (e_ > 1) os << "(pi), e=" << e_;
      break;
    case ModelKind::IteratedSeries:
      os << "F_" << residue_->order() << "((u))((t)) exponents " << group_.str();
      break;
  }
  return os.str();
}

bool operator==(const FieldModel& a, const FieldModel& b) {
  if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.residue_ != b.residue_ || a.e_ != b.e_) return false;
  if (a.eisenstein_ != b.eisenstein_) return false;
  if (a.group_.rank != b.group_.rank) return false;
  for (int i = 0; i < a.group_.rank; ++i) {
    const auto& x = a.group_.coords[i];
    const auto& y = b.group_.coords[i];
    if (x.kind != y.kind || x.p != y.p || x.denominator != y.denominator) return false;
  }
  return true;
}

bool same_model(const ModelPtr& a, const ModelPtr& b) { return a == b || *a == *b; }

// ------------------------------------------------------------------- Element

Element::Element(ModelPtr model) : model_(std::move(model)), prec_(Value::infinity(1)) {
  if (!model_) fail(ErrorCode::Precondition, "null field model");
  prec_ = Value::infinity(model_->value_rank());
  if (model_->kind() == ModelKind::Padic) coeffs_.assign(static_cast<std::size_t>(model_->ramification()), Rational(0));
}

Element Element::from_integer(const ModelPtr& m, const Integer& n) {
  return from_rational(m, Rational(n));
}

Element Element::from_rational(const ModelPtr& m, const Rational& q) {
  Element x(m);
  if (m->kind() == ModelKind::Padic) {
    x.coeffs_[0] = q;
    x.coeffs_[0].canonicalize();
    return x;
  }
  Integer p = m->p();
  Integer num = q.get_num(), den = q.get_den();
  if (den % p == 0) fail(ErrorCode::Precondition, "rational with p in the denominator has no residue");
  Integer r;
  mpz_invert(r.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  r = (num * r) % p;
  if (r < 0) r += p;
  if (r != 0) {
    Value zero = m->value_rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
    x.terms_.emplace(zero, static_cast<Coeff>(r.get_ui()));
  }
  return x;
}

Element Element::monomial(const ModelPtr& m, Coeff c, const Value& exponent) {
  if (m->kind() == ModelKind::Padic) fail(ErrorCode::ModelMismatch, "monomials live in series models");
  Terms t;
  if (c != 0) t.emplace(exponent, c);
  return series(m, std::move(t), Value::infinity(m->value_rank()));
}

Element Element::series(const ModelPtr& m, Terms terms, const Value& precision) {
  if (m->kind() == ModelKind::Padic) fail(ErrorCode::ModelMismatch, "series data for a p-adic model");
  if (precision.rank() != m->value_rank()) fail(ErrorCode::RankMismatch, "precision rank");
  for (const auto& [e, c] : terms) {
    if (e.rank() != m->value_rank() || e.is_infinite())
      fail(ErrorCode::RankMismatch, "exponent rank does not match the model");
    if (!m->value_group().contains(e))
      fail(ErrorCode::Precondition, "exponent " + e.str() + " is not in " + m->value_group().str());
    if (c >= m->residue_field()->order()) fail(ErrorCode::Precondition, "coefficient outside F_q");
  }
  Element x(m);
  x.terms_ = std::move(terms);
  x.prec_ = precision;
  x.normalize();
  return x;
}

Element Element::padic(const ModelPtr& m, std::vector<Rational> coeffs, const Value& precision) {
  if (m->kind() != ModelKind::Padic) fail(ErrorCode::ModelMismatch, "p-adic data for a series model");
  if (coeffs.size() > static_cast<std::size_t>(m->ramification()))
    fail(ErrorCode::Precondition, "too many uniformizer-basis coefficients");
  if (precision.rank() != 1) fail(ErrorCode::RankMismatch, "precision rank");
  Element x(m);
  for (std::size_t i = 0; i < coeffs.size(); ++i) x.coeffs_[i] = coeffs[i];
  x.prec_ = precision;
  x.normalize();
  return x;
}

Element Element::uniformizer(const ModelPtr& m) {
  if (m->kind() == ModelKind::Padic) {
    Element x(m);
    if (m->ramification() == 1) x.coeffs_[0] = m->p();
    else x.coeffs_[1] = 1;
    return x;
  }
  if (m->kind() == ModelKind::IteratedSeries) return monomial(m, 1, Value(Rational(1), Rational(0)));
  return monomial(m, 1, Value(Rational(1)));
}

Element Element::lift_residue(const ModelPtr& m, Coeff r) {
  if (m->kind() == ModelKind::Padic) return from_integer(m, static_cast<long>(r));
  Value zero = m->value_rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
  return monomial(m, r, zero);
}

Element Element::of_value(const ModelPtr& m, const Value& v) {
  if (!m->value_group().contains(v) || v.is_infinite())
    fail(ErrorCode::Precondition, "value " + v.str() + " is not in the value group");
  if (m->kind() != ModelKind::Padic) return monomial(m, 1, v);
  Rational ve = v.q() * m->ramification();
  long n = ve.get_num().get_si();
  Element pi = uniformizer(m);
  if (n >= 0) return pi.pow(static_cast<unsigned long>(n));
  return pi.inverse().pow(static_cast<unsigned long>(-n));
}

const Element::Terms& Element::terms() const {
  if (model_->kind() == ModelKind::Padic) fail(ErrorCode::ModelMismatch, "p-adic element has no series terms");
  return terms_;
}

const std::vector<Rational>& Element::padic_coeffs() const {
  if (model_->kind() != ModelKind::Padic) fail(ErrorCode::ModelMismatch, "series element has no p-adic coefficients");
  return coeffs_;
}

void Element::normalize() {
  if (model_->kind() == ModelKind::Padic) {
    for (auto& c : coeffs_) c.canonicalize();
    if (prec_.is_infinite()) return;
    int e = model_->ramification();
    for (int i = 0; i < e; ++i) {
      long n = ceil_rational(prec_.q() - make_rational(i, e));
      coeffs_[i] = reduce_mod_power(coeffs_[i], n, model_->p());
    }
    return;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || compare(it->first, prec_) >= 0) it = terms_.erase(it);
    else ++it;
  }
}

void Element::require_same_model(const Element& o) const {
  if (!same_model(model_, o.model_))
    fail(ErrorCode::ModelMismatch, "elements of " + model_->str() + " and " + o.model_->str());
}

bool Element::is_zero() const {
  if (model_->kind() == ModelKind::Padic)
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  return terms_.empty();
}

Value Element::value() const {
  if (is_zero()) {
    if (is_exact()) return Value::infinity(model_->value_rank());
    fail(ErrorCode::InsufficientPrecision, "element is zero at precision " + prec_.str());
  }
  if (model_->kind() != ModelKind::Padic) return terms_.begin()->first;
  int e = model_->ramification();
  std::optional<Rational> best;
  for (int i = 0; i < e; ++i) {
    if (coeffs_[i] == 0) continue;
    Rational v = Rational(padic_order(coeffs_[i], model_->p())) + make_rational(i, e);
    if (!best || v < *best) best = v;
  }
  return Value(*best);
}

Value Element::value_lower_bound() const { return is_zero() ? prec_ : value(); }

Element::Coeff Element::residue() const {
  const auto& F = *model_->residue_field();
  if (is_zero()) {
    Value zero = model_->value_rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
    if (compare(prec_, zero) > 0) return 0;
    fail(ErrorCode::InsufficientPrecision, "residue undetermined at precision " + prec_.str());
  }
  Value v = value();
  Value zero = v.rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
  if (compare(v, zero) < 0) fail(ErrorCode::NotInValuationRing, "element of value " + v.str() + " has no residue");
  if (model_->kind() != ModelKind::Padic) {
    auto it = terms_.find(zero);
    return it == terms_.end() ? 0 : it->second;
  }
  const Rational& c0 = coeffs_[0];
  if (c0 == 0 || padic_order(c0, model_->p()) > 0) return 0;
  Integer p = model_->p();
  Integer inv;
  Integer den = c0.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = c0.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return F.from_integer(r.get_si());
}

Element::Coeff Element::leading_coefficient() const {
  Value v = value();
  if (model_->kind() != ModelKind::Padic) return terms_.begin()->second;
  return (*this * of_value(model_, v).inverse()).residue();
}

Element Element::truncated(const Value& prec) const {
  Element x = *this;
  x.prec_ = min(prec_, prec);
  x.normalize();
  return x;
}

Element Element::operator+(const Element& o) const {
  require_same_model(o);
  Element r = *this;
  r.prec_ = min(prec_, o.prec_);
  if (model_->kind() == ModelKind::Padic) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  } else {
    const auto& F = *model_->residue_field();
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = r.terms_.emplace(e, c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  }
  r.normalize();
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  if (model_->kind() == ModelKind::Padic) {
    for (auto& c : r.coeffs_) c = -c;
  } else {
    const auto& F = *model_->residue_field();
    for (auto& [e, c] : r.terms_) c = F.neg(c);
  }
  r.normalize();
  return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
  require_same_model(o);
  Value prec = min(value_lower_bound() + o.prec_, o.value_lower_bound() + prec_);
  Element r(model_);
  r.prec_ = prec;
  if (model_->kind() == ModelKind::Padic) {
    int e = model_->ramification();
    std::vector<Rational> prod(static_cast<std::size_t>(2 * e - 1), Rational(0));
    for (int i = 0; i < e; ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; j < e; ++j)
        if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    const auto& E = model_->eisenstein();
    for (int k = 2 * e - 2; k >= e; --k) {
      if (prod[k] == 0) continue;
      Rational c = prod[k];
      prod[k] = 0;
      for (int j = 0; j < e; ++j) prod[k - e + j] -= c * Rational(E[j]);
    }
    for (int i = 0; i < e; ++i) r.coeffs_[i] = prod[i];
    r.normalize();
    return r;
  }
  const auto& F = *model_->residue_field();
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Value ex = ea + eb;
      if (compare(ex, prec) >= 0) continue;
      Coeff c = F.mul(ca, cb);
      auto [it, inserted] = r.terms_.emplace(std::move(ex), c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  }
  r.normalize();
  return r;
}

Element Element::pow(unsigned long n) const {
  if (n == 0) return one(model_);
  if (model_->kind() != ModelKind::Padic && model_->characteristic() != 0) {
    // Frobenius is cheap and exact in characteristic p
    auto p = static_cast<unsigned long>(model_->p());
    if (n % p == 0) return frobenius().pow(n / p);
  }
  Value target = Value::infinity(model_->value_rank());
  Value vl = value_lower_bound();
  if (!is_exact()) {
    // (x + e)^n - x^n with v(e) >= P: the k-th binomial term has value
    // v(C(n,k)) + (n-k) v(x) + k P
    if (n > 100000) fail(ErrorCode::Unsupported, "exponent too large for inexact power");
    long p = model_->p();
    for (unsigned long k = 1; k <= n; ++k) {
      Integer b = binomial(n, k);
      Value vb = Value(Rational(0));
      if (model_->characteristic() != 0) {
        if (b % p == 0) continue;
      } else {
        vb = Value(Rational(padic_order(Rational(b), p)));
      }
      if (model_->value_rank() == 2) vb = Value(vb.q(), Rational(0));
      Value cand = vb + vl.scaled(Rational(static_cast<long>(n - k))) + prec_.scaled(Rational(static_cast<long>(k)));
      target = min(target, cand);
    }
  }
  auto bound = [&](unsigned long k) {
    if (target.is_infinite()) return target;
    return target - vl.scaled(Rational(static_cast<long>(n - k)));
  };
  Element base = *this;
  base.prec_ = Value::infinity(model_->value_rank());
  Element result = one(model_);
  unsigned long have = 0, bp = 1;
  unsigned long m = n;
  while (m) {
    if (m & 1) {
      have += bp;
      result = (result * base).truncated(bound(have));
    }
    m >>= 1;
    if (m) {
      bp *= 2;
      base = (base * base).truncated(bound(std::min(bp, n)));
    }
  }
  result.prec_ = target;
  result.normalize();
  return result;
}

Element Element::inverse(std::optional<Value> target) const {
  Value v = value();
  if (v.is_infinite()) fail(ErrorCode::Precondition, "inverse of zero");
  if (model_->kind() == ModelKind::Padic) {
    Element r(model_);
    int e = model_->ramification();
    if (e == 1) {
      r.coeffs_[0] = 1 / coeffs_[0];
    } else {
      QPoly a(coeffs_.begin(), coeffs_.end());
      qtrim(a);
      QPoly m;
      for (const auto& c : model_->eisenstein()) m.push_back(Rational(c));
      QPoly inv = qinvmod(a, m);
      for (std::size_t i = 0; i < inv.size(); ++i) r.coeffs_[i] = inv[i];
    }
    Value prec = is_exact() ? Value::infinity(1) : prec_ - v - v;
    if (target) prec = min(prec, *target);
    r.prec_ = prec;
    r.normalize();
    return r;
  }
  const auto& F = *model_->residue_field();
  auto lead = terms_.begin();
  Coeff lead_inv = F.inv(lead->second);
  if (terms_.size() == 1 && is_exact()) {
    Terms t;
    t.emplace(-lead->first, lead_inv);
    Element r = series(model_, std::move(t), Value::infinity(model_->value_rank()));
    if (target) r = r.truncated(*target);
    return r;
  }
  if (model_->value_rank() != 1)
    fail(ErrorCode::Unsupported, "rank-2 inversion is limited to exact monomials");
  Value result_prec = is_exact() ? Value::infinity(1) : prec_ - v - v;
  if (target) result_prec = min(result_prec, *target);
  if (result_prec.is_infinite())
    fail(ErrorCode::Precondition, "inverse of an exact non-monomial series needs a target precision");
  // x = lead * t^v * (1 + m); invert 1 + m by Newton iteration up to relative precision R
  Value rel = result_prec + v;
  Terms unit_terms;
  for (const auto& [e, c] : terms_) unit_terms.emplace(e - v, F.mul(c, lead_inv));
  Element u = series(model_, std::move(unit_terms), prec_ - v);
  Element s = one(model_).truncated(rel);
  Element two = from_integer(model_, 2);
  for (int iter = 0; iter < 200; ++iter) {
    Element next = (s * (two - (u * s))).truncated(rel);
    if (next.identical(s)) break;
    s = std::move(next);
  }
  Terms shift;
  for (const auto& [e, c] : s.terms_) shift.emplace(e - v, F.mul(c, lead_inv));
  return series(model_, std::move(shift), result_prec);
}

Element Element::frobenius() const {
  if (model_->characteristic() == 0) fail(ErrorCode::ModelMismatch, "Frobenius needs characteristic p");
  const auto& F = *model_->residue_field();
  Rational p(model_->p());
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e.scaled(p), F.frobenius(c));
  Element r(model_);
  r.terms_ = std::move(t);
  r.prec_ = prec_.scaled(p);
  return r;
}

Element Element::frobenius_root() const {
  if (model_->characteristic() == 0) fail(ErrorCode::ModelMismatch, "Frobenius root needs characteristic p");
  const auto& F = *model_->residue_field();
  Rational inv_p(1, model_->p());
  Terms t;
  for (const auto& [e, c] : terms_) {
    Value ne = e.scaled(inv_p);
    if (!model_->value_group().contains(ne))
      fail(ErrorCode::NotPDivisible, "exponent " + e.str() + " has no p-th root in " +
                                         model_->value_group().str());
    t.emplace(std::move(ne), F.pth_root(c));
  }
  Element r(model_);
  r.terms_ = std::move(t);
  r.prec_ = prec_.scaled(inv_p);
  return r;
}

bool Element::identical(const Element& o) const {
  if (!same_model(model_, o.model_)) return false;
  if (compare(prec_, o.prec_) != 0) return false;
  if (model_->kind() == ModelKind::Padic) return coeffs_ == o.coeffs_;
  return terms_ == o.terms_;
}

std::string Element::str(bool with_precision) const {
  std::ostringstream os;
  const auto& F = *model_->residue_field();
  if (model_->kind() == ModelKind::Padic) {
    int e = model_->ramification();
    bool first = true;
    for (int i = 0; i < e; ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) os << rational_str(coeffs_[i]);
      else {
        if (coeffs_[i] != 1) os << (coeffs_[i] < 0 || coeffs_[i].get_den() != 1 ? "(" + rational_str(coeffs_[i]) + ")" : rational_str(coeffs_[i])) << "*";
        os << "pi";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    if (with_precision && !is_exact()) {
      os << " @prec " << model_->p() << "^";
      const Rational& pq = prec_.q();
      if (pq.get_den() == 1 && pq >= 0) os << rational_str(pq);
      else os << "(" << rational_str(pq) << ")";
    }
    return os.str();
  }
  bool first = true;
  for (const auto& [ex, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    auto add_var = [&](const char* name, const Rational& q) {
      if (q == 0) return;
      if (q == 1) factors.emplace_back(name);
      else factors.emplace_back(std::string(name) + "^" + exponent_str(q));
    };
    add_var("t", ex[0]);
    if (ex.rank() == 2) add_var("u", ex[1]);
    std::string coeff = F.str(c);
    if (factors.empty()) {
      os << coeff;
      continue;
    }
    if (c != 1) os << coeff << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  if (first) os << "0";
  if (with_precision && !is_exact()) os << " @prec " << prec_.str();
  return os.str();
}

}  // namespace ramlab
