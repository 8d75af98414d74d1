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
#include "ramlab/ops.hpp"

namespace ramlab {

namespace {

Value zero_value(const ModelPtr& m) {
  return m->value_rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
}

Integer ipow(long p, long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  return r;
}

// unit rational mod p^n as an integer in [0, p^n)
Integer unit_mod(const Rational& u, long p, long n) {
  Integer mod = ipow(p, n), inv, r;
  Integer den = u.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    fail(ErrorCode::Precondition, "denominator divisible by p");
  r = u.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

long ceil_long(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

// Square roots over a ramified extension of Q_2: a residue search for r0 with
// v(r0^2 - u) > 2, then Newton r <- (r + u/r)/2.
Element ramified_sqrt(const Element& a, std::optional<Value> target) {
  const auto& m = a.model();
  if (m->p() != 2) fail(ErrorCode::Unsupported, "p-th roots in ramified models only for p = 2");
  int e = m->ramification();
  Value va = a.value();
  Rational half = va.q() / 2;
  half.canonicalize();
  Rational he = half * e;
  he.canonicalize();
  if (he.get_den() != 1) fail(ErrorCode::NotPthPower, "value " + va.str() + " is not divisible by 2");
  const auto& cs = a.padic_coeffs();
  bool rational = a.is_exact() && cs[0] > 0;
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (cs[i] != 0) rational = false;
  if (rational) {
    Integer rn, rd;
    Integer num = cs[0].get_num(), den = cs[0].get_den();
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) != 0 && mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) != 0) {
      Element r = Element::from_rational(m, Rational(rn, rd));
      return target ? r.truncated(*target) : r;
    }
  }
  Element u = a * Element::of_value(m, -va);
  Value two = Value::of(2);
  if (!u.is_exact() && !(u.precision() > two))
    fail(ErrorCode::InsufficientPrecision, "unit part known only to " + u.precision().str());
  Rational rel;
  if (u.is_exact()) rel = target ? Rational(target->q() - half) : Rational(kDefaultWorkingPrecision);
  else {
    rel = u.precision().q() - 1;
    if (target) rel = std::min(rel, Rational(target->q() - half));
  }
  if (rel < 1) rel = 1;
  Value T(rel);
  Element pi = Element::uniformizer(m);
  std::optional<Element> r;
  for (long bits = 0; bits < (1L << e) && !r; ++bits) {
    Element cand = Element::one(m), pij = Element::one(m);
    for (int j = 1; j <= e; ++j) {
      pij = pij * pi;
      if (bits >> (j - 1) & 1) cand = cand + pij;
    }
    if ((cand * cand - u).value_lower_bound() > two) r = cand;
  }
  if (!r) fail(ErrorCode::NotPthPower, a.str() + " is not a square");
  Element halfE = Element::from_rational(m, Rational(1, 2));
  Value work = T + Value::of(3);
  const Element& uw = u;
  for (int iter = 0; iter < 256; ++iter) {
    Element d = *r * *r - uw;
    if (d.value_lower_bound() >= T + Value::of(1)) break;
    if (d.is_zero()) break;
    r = ((*r + uw * r->inverse(work)) * halfE).truncated(work);
  }
  Element d = *r * *r - uw;
  Value got = d.value_lower_bound() - Value::of(1);
  Element root = r->truncated(min(T, got));
  return root * Element::of_value(m, Value(half));
}

Element padic_pth_root(const Element& a, std::optional<Value> target) {
  const auto& m = a.model();
  long p = m->p();
  if (m->ramification() != 1) return ramified_sqrt(a, target);
  Value va = a.value();
  Rational k = va.q();
  if (k.get_den() != 1 || k.get_num() % p != 0)
    fail(ErrorCode::NotPthPower, "value " + va.str() + " is not divisible by " + std::to_string(p));
  long kk = k.get_num().get_si();
  const Rational& q = a.padic_coeffs()[0];
  if (a.is_exact() && !(q < 0 && p % 2 == 0)) {
    Integer an = abs(q.get_num()), den = q.get_den(), rn, rd;
    bool exact_num = mpz_root(rn.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    bool exact_den = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    if (exact_num && exact_den) {
      if (q < 0) rn = -rn;
      Element r = Element::from_rational(m, Rational(rn, rd));
      return target ? r.truncated(*target) : r;
    }
  }
  Element u = a * Element::of_value(m, -va);
  const Rational& uq = u.padic_coeffs()[0];
  long need = p == 2 ? 3 : 2;
  if (!u.is_exact() && u.precision() < Value::of(need))
    fail(ErrorCode::InsufficientPrecision, "unit part known only to " + u.precision().str());
  Integer low = unit_mod(uq, p, need);
  Integer pn = ipow(p, need);
  bool is_power;
  if (p == 2) {
    is_power = low == 1;
  } else {
    Integer t;
    Integer e = p - 1;
    mpz_powm(t.get_mpz_t(), low.get_mpz_t(), e.get_mpz_t(), pn.get_mpz_t());
    is_power = t == 1;
  }
  if (!is_power) fail(ErrorCode::NotPthPower, a.str() + " is not a " + std::to_string(p) + "-th power");
  Rational shift = Rational(kk / p);
  long rel;
  if (u.is_exact()) {
    Value t = target ? *target : Value(shift + kDefaultWorkingPrecision);
    rel = ceil_long(t.q() - shift);
  } else {
    rel = ceil_long(u.precision().q()) - 1;
    if (target) rel = std::min(rel, ceil_long(target->q() - shift));
  }
  rel = std::max(rel, 1L);
  long M = rel + 1;
  Integer mod = ipow(p, M);
  Integer U = unit_mod(uq, p, M);
  // least r0 in [1, p^2) with r0^p = U mod p^3 (mod p^M when smaller)
  long low_exp = std::min(3L, M);
  Integer lowmod = ipow(p, low_exp), Ulow = U % lowmod, r;
  bool found = false;
  for (long r0 = 1; r0 < p * p && !found; ++r0) {
    Integer t;
    mpz_powm_ui(t.get_mpz_t(), Integer(r0).get_mpz_t(), static_cast<unsigned long>(p), lowmod.get_mpz_t());
    if (t == Ulow) {
      r = r0;
      found = true;
    }
  }
  if (!found) fail(ErrorCode::CertificationFailed, "no starting root mod p^2");
  for (int iter = 0; iter < 256; ++iter) {
    Integer rp;
    mpz_pow_ui(rp.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
    Integer diff = rp - U;
    if (diff % mod == 0) break;
    Integer rp1, inv;
    mpz_powm_ui(rp1.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p - 1), mod.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), rp1.get_mpz_t(), mod.get_mpz_t());
    r = r - (diff / p) * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  }
  Element root = Element::padic(m, {Rational(r)}, Value::of(rel));
  return root * Element::of_value(m, Value(shift));
}

void require_two_adic(const Element& x, const char* what) {
  const auto& m = x.model();
  if (m->characteristic() != 0)
    fail(ErrorCode::Precondition, std::string(what) + " is vacuous in characteristic p (v(p) = inf)");
  if (m->p() != 2) fail(ErrorCode::Unsupported, std::string(what) + " is implemented over 2-adic fields only");
}

Element certified_root(const Element& q, std::optional<Value> target) {
  try {
    return pth_root(q, target);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPthPower)
      fail(ErrorCode::CertificationFailed, "class identity failed: " + std::string(e.what()));
    throw;
  }
}

}  // namespace

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::PthPower: return "pth-power";
    case WitnessKind::WpPreimage: return "wp-preimage";
    case WitnessKind::UnitFactor: return "unit-factor";
  }
  return "unknown";
}

std::string_view to_string(PowerVerdict v) {
  switch (v) {
    case PowerVerdict::Yes: return "yes";
    case PowerVerdict::No: return "no";
    case PowerVerdict::Insufficient: return "insufficient-precision";
  }
  return "unknown";
}

Witness Witness::pth_power(std::string claim, Element lhs, Element rhs, Element root) {
  return Witness{WitnessKind::PthPower, std::move(claim), std::move(lhs), std::move(rhs), std::move(root)};
}

Witness Witness::wp_preimage(std::string claim, Element m, Element u) {
  Element z = Element::zero(m.model());
  return Witness{WitnessKind::WpPreimage, std::move(claim), std::move(m), std::move(z), std::move(u)};
}

Element Witness::defect() const {
  auto p = static_cast<unsigned long>(lhs.model()->p());
  if (kind == WitnessKind::WpPreimage) return root.pow(p) - root - lhs;
  return lhs - rhs * root.pow(p);
}

Element pth_root(const Element& a, std::optional<Value> target) {
  if (a.model()->kind() == ModelKind::Padic) return padic_pth_root(a, target);
  Element r = a.frobenius_root();
  return target ? r.truncated(*target) : r;
}

PthPowerResult is_pth_power(const Element& a, std::optional<Value> target) {
  const auto& m = a.model();
  try {
    if (m->kind() != ModelKind::Padic) {
      Element r = a.frobenius_root();
      if (!m->is_perfect() && !a.is_exact())
        return {PowerVerdict::Insufficient, std::nullopt, "unknown terms may leave p Gamma"};
      return {PowerVerdict::Yes, r, ""};
    }
    if (!a.value_known()) return {PowerVerdict::Insufficient, std::nullopt, "value unknown at precision"};
    return {PowerVerdict::Yes, padic_pth_root(a, target), ""};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPthPower || e.code() == ErrorCode::NotPDivisible)
      return {PowerVerdict::No, std::nullopt, e.what()};
    if (e.code() == ErrorCode::InsufficientPrecision)
      return {PowerVerdict::Insufficient, std::nullopt, e.what()};
    throw;
  }
}

Element hensel_lift(const Poly& f, Element::Coeff r0, const Value& target) {
  const auto& m = f.model();
  if (f.degree() < 1) fail(ErrorCode::Precondition, "Hensel lifting needs a nonconstant polynomial");
  Value zero = zero_value(m);
  GfPoly red{m->residue_field(), {}};
  for (const auto& c : f.coeffs()) {
    if (c.value_known() && c.value() < zero)
      fail(ErrorCode::NotIntegral, "coefficient " + c.str() + " has negative value");
    red.c.push_back(c.residue());
  }
  red.trim();
  if (red.eval(r0) != 0) fail(ErrorCode::Precondition, "residue " + m->residue_field()->str(r0) + " is not a root of the reduction");
  if (red.derivative().eval(r0) == 0)
    fail(ErrorCode::MultipleRoot, "residue root " + m->residue_field()->str(r0) + " is not simple");
  Poly df = f.derivative();
  Element r = Element::lift_residue(m, r0);
  for (int iter = 0; iter < 256; ++iter) {
    Element fr = f.eval(r);
    if (fr.is_zero()) return r.truncated(min(target, fr.precision()));
    if (fr.value() >= target) return r.truncated(target);
    Element step = fr * df.eval(r).inverse(target);
    r = (r - step).truncated(target);
  }
  fail(ErrorCode::CertificationFailed, "Newton iteration did not converge");
}

Witness one_unit_shift_a(const Element& b, const Element& c, std::optional<Value> target) {
  require_two_adic(b, "one-unit shift a)");
  const auto& m = b.model();
  Element one = Element::one(m);
  ordval::DeltaContext ctx(m->p(), m->vp());
  if (!(b.value_lower_bound() > Value::of(0))) fail(ErrorCode::Precondition, "1 + b is not a 1-unit");
  std::string claim = (one + b).str() + " in (" + (one + b + c).str() + ")*(K^x)^2";
  if (c.is_zero() && c.is_exact()) return Witness::pth_power(claim, one + b, one + b, one);
  if (!(c.value_lower_bound() > ctx.fixed_point()))
    fail(ErrorCode::Precondition, "v(c) = " + c.value_lower_bound().str() + " is not > " + ctx.fixed_point().str());
  Element q = (one + b).divided_by(one + b + c);
  return Witness::pth_power(claim, one + b, one + b + c, certified_root(q, target));
}

Witness one_unit_shift_b(const Element& b, const Element& c, const Element& s, std::optional<Value> target) {
  require_two_adic(b, "one-unit shift b)");
  const auto& m = b.model();
  Element one = Element::one(m);
  ordval::DeltaContext ctx(m->p(), m->vp());
  if (!(b.value_lower_bound() > Value::of(0)) || !(c.value_lower_bound() > Value::of(0)))
    fail(ErrorCode::Precondition, "1 + b and 1 + c must be 1-units");
  if (!(b.value_lower_bound() + c.value_lower_bound() > ctx.fixed_point()))
    fail(ErrorCode::Precondition, "v(bc) is not > " + ctx.fixed_point().str());
  Witness given = Witness::pth_power("1 + c is a p-th power", one + c, one, s);
  if (!given.verify()) fail(ErrorCode::Precondition, "supplied root does not satisfy s^p = 1 + c");
  // (1 + b + c) = (1 + b)(1 + c) w  with  w = 1 - bc / ((1 + b)(1 + c)),  v(w - 1) > p/(p-1) v(p)
  Element w = one - (b * c).divided_by((one + b) * (one + c));
  Element r = s.inverse() * certified_root(w.inverse(), target);
  std::string claim = (one + b).str() + " in (" + (one + b + c).str() + ")*(K^x)^2";
  return Witness::pth_power(claim, one + b, one + b + c, r);
}

Witness one_unit_shift_c(const Element& b, const Element& c, std::optional<Value> target) {
  require_two_adic(b, "one-unit shift c)");
  const auto& m = b.model();
  long p = m->p();
  Element one = Element::one(m);
  Element pc = c.scaled(p);
  Element cp = c.pow(static_cast<unsigned long>(p));
  std::string claim = (one + b - pc).str() + " in (" + (one + b + cp).str() + ")*(K^x)^2";
  if (c.is_zero() && c.is_exact()) return Witness::pth_power(claim, one + b, one + b, one);
  Value bound = m->vp().scaled(Rational(1, p - 1));
  if (!(b.value_lower_bound() >= bound))
    fail(ErrorCode::Precondition, "v(b) is not >= " + bound.str());
  if (!(cp.value_lower_bound() > m->vp())) fail(ErrorCode::Precondition, "v(c^p) is not > v(p)");
  Element q = (one + b - pc).divided_by(one + b + cp);
  return Witness::pth_power(claim, one + b - pc, one + b + cp, certified_root(q, target));
}

std::pair<Element, Witness> rewrite_delta_inverse(const Element& b, const Element& d, std::optional<Value> target) {
  require_two_adic(b, "Delta^-1 rewrite");
  const auto& m = b.model();
  long p = m->p();
  Element one = Element::one(m);
  if (d.is_zero() && d.is_exact())
    return {d, Witness::pth_power("trivial rewrite", one + b, one + b, one)};
  ordval::DeltaContext ctx(p, m->vp());
  Value bound = m->vp().scaled(Rational(1, p - 1));
  if (!(b.value_lower_bound() >= bound)) fail(ErrorCode::Precondition, "v(b) is not >= " + bound.str());
  if (!(ctx.delta_inverse(d.value()) > m->vp()))
    fail(ErrorCode::Precondition, "delta^-1(v(d)) = " + ctx.delta_inverse(d.value()).str() + " is not > v(p)");
  Element c = -d.divided_by(Element::from_integer(m, p));
  Element D = c.pow(static_cast<unsigned long>(p));
  Witness w = one_unit_shift_c(b, c, target);
  w.claim = (one + b + d).str() + " in (" + (one + b + D).str() + ")*(K^x)^2";
  return {D, w};
}

}  // namespace ramlab
