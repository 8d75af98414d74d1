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
#include "ramlab/extcheck.hpp"

#include <map>
#include <numeric>

namespace ramlab::ext {

namespace {

bool is_power(long n, long p) {
  if (n < 1) return false;
  if (p <= 1) return n == 1;
  while (n % p == 0) n /= p;
  return n == 1;
}

// smallest k in [1, cap] with k*g in the rank-1 group, cap + 1 if none
long order_mod(const ordval::GroupCoordinate& group, const Rational& g, long cap) {
  for (long k = 1; k <= cap; ++k)
    if (group.contains(g * k)) return k;
  return cap + 1;
}

Value zero_of(const ModelPtr& m) {
  return m->value_rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
}

const Value& checked_value(const Element& c, const std::string& what) {
  static thread_local Value v;
  if (!c.value_known()) fail(ErrorCode::InsufficientPrecision, what + " vanishes at precision " + c.precision().str());
  v = c.value();
  return v;
}

// reduction of an integral polynomial; nullopt when some coefficient has negative value
std::optional<GfPoly> reduce(const Poly& h) {
  const auto& m = h.model();
  GfPoly r{m->residue_field(), {}};
  Value zero = zero_of(m);
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    const auto& c = h.coeffs()[i];
    if (c.is_zero() && c.is_exact()) {
      r.c.push_back(0);
      continue;
    }
    if (checked_value(c, "coefficient " + std::to_string(i)) < zero) return std::nullopt;
    r.c.push_back(c.residue());
  }
  r.trim();
  return r;
}

bool has_root(const GfPoly& g) {
  for (FiniteField::Elem x = 0; x < g.field->order(); ++x)
    if (g.eval(x) == 0) return true;
  return false;
}

ExtensionInvariants finish(ExtensionInvariants inv, const ModelPtr& m) {
  inv.p = m->p();
  if (inv.e * inv.f * inv.defect != inv.degree)
    fail(ErrorCode::InconsistentData, "degree " + std::to_string(inv.degree) + " != e f defect");
  if (!is_power(inv.defect, inv.p))
    fail(ErrorCode::InconsistentData, "defect " + std::to_string(inv.defect) + " is not a power of " + std::to_string(inv.p));
  inv.te1 = inv.e % inv.p != 0;
  inv.te3 = inv.defect == 1;
  return inv;
}

// X^p - X - a in characteristic p
std::optional<Element> artin_schreier_rhs(const Poly& h) {
  const auto& m = h.model();
  long p = m->characteristic();
  if (p == 0 || h.degree() != p || !h.is_exact()) return std::nullopt;
  const auto& c = h.coeffs();
  Element one = Element::one(m);
  if (!(c[static_cast<std::size_t>(p)] - one).is_zero() || !(c[1] + one).is_zero()) return std::nullopt;
  for (long i = 2; i < p; ++i)
    if (!c[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  return -c[0];
}

// In a p-divisible group c t^(p^j g) = c^(1/p^j) t^g modulo wp(K). Moves every
// negative monomial to the exponent nearest 0 in its orbit under g -> p g and
// returns the reduced element.
Element collapse_orbits(const Element& a) {
  const auto& m = a.model();
  const auto& F = *m->residue_field();
  long p = m->p();
  struct Orbit {
    Rational top;  // exponent nearest 0
    std::vector<std::pair<Rational, Element::Coeff>> terms;
  };
  std::map<Rational, Orbit> orbits;
  Element::Terms rest;
  for (const auto& [e, c] : a.terms()) {
    if (e.q() >= 0) {
      rest.emplace(e, c);
      continue;
    }
    // orbit key: the exponent with every factor p removed from numerator and denominator
    Integer num = e.q().get_num(), den = e.q().get_den();
    while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p)) != 0) num /= p;
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) != 0) den /= p;
    Rational key(num, den);
    auto& o = orbits[key];
    if (o.terms.empty() || e.q() > o.top) o.top = e.q();
    o.terms.emplace_back(e.q(), c);
  }
  for (const auto& [key, o] : orbits) {
    Element::Coeff sum = 0;
    for (const auto& [e, c] : o.terms) {
      // e = p^j top
      Rational q = e / o.top;
      q.canonicalize();
      Element::Coeff r = c;
      for (Integer k = q.get_num(); k > 1; k /= p) r = F.pth_root(r);
      sum = F.add(sum, r);
    }
    if (sum != 0) rest.emplace(Value(o.top), sum);
  }
  return Element::series(m, std::move(rest), Value::infinity(1));
}

ExtensionInvariants artin_schreier_rule(const ModelPtr& m, Element a) {
  long p = m->p();
  ExtensionInvariants inv;
  inv.degree = p;
  const auto& group = m->value_group();
  const auto& F = *m->residue_field();
  bool divisible = group.is_p_divisible(p);
  if (divisible && m->value_rank() == 1) a = collapse_orbits(a);
  for (int guard = 0; guard < 10000; ++guard) {
    if (a.is_zero()) fail(ErrorCode::Precondition, "X^p - X - a is reducible (a in wp(K))");
    Value g = a.value();
    Value zero = zero_of(m);
    if (g > zero) fail(ErrorCode::Precondition, "X^p - X - a is reducible (v(a) > 0, Hensel)");
    if (g == zero) {
      GfPoly r{m->residue_field(), std::vector<FiniteField::Elem>(static_cast<std::size_t>(p + 1), 0)};
      r.c[0] = F.neg(a.residue());
      r.c[1] = F.neg(1);
      r.c[static_cast<std::size_t>(p)] = 1;
      if (has_root(r)) fail(ErrorCode::Precondition, "X^p - X - a is reducible (residue root)");
      inv.f = p;
      inv.rule = "artin-schreier, residue extension";
      return inv;
    }
    Value gp = g.scaled(Rational(1, p));
    if (!group.contains(gp)) {
      inv.e = p;
      inv.rule = "artin-schreier, v(a) = " + g.str() + " not in p vK";
      return inv;
    }
    if (divisible) {
      // after collapsing orbits the leading term descends forever: immediate
      inv.defect = p;
      inv.rule = "artin-schreier, immediate (v(a) = " + g.str() + " cannot be raised to 0)";
      return inv;
    }
    Element b = Element::monomial(m, F.pth_root(a.leading_coefficient()), gp);
    a = a - (b.pow(static_cast<unsigned long>(p)) - b);
  }
  fail(ErrorCode::GuardViolation, "artin-schreier reduction did not terminate");
}

}  // namespace

ExtensionInvariants extension_invariants(const ExtensionSpec& spec) {
  const auto& m = spec.base;
  const Poly& h = spec.minpoly;
  if (!same_model(m, h.model())) fail(ErrorCode::ModelMismatch, "minimal polynomial lives in another model");
  long n = h.degree();
  if (n < 1) fail(ErrorCode::Precondition, "minimal polynomial must have degree >= 1");
  if (!(h.coeff(static_cast<std::size_t>(n)) - Element::one(m)).is_zero())
    fail(ErrorCode::Precondition, "minimal polynomial must be monic");
  ExtensionInvariants inv;
  inv.degree = n;
  if (n == 1) {
    inv.rule = "degree 1";
    return finish(inv, m);
  }
  if (spec.declared) {
    const auto& d = *spec.declared;
    if (d.e < 1 || d.f < 1 || n % (d.e * d.f) != 0)
      fail(ErrorCode::InconsistentData, "declared e = " + std::to_string(d.e) + ", f = " + std::to_string(d.f) +
                                            " do not divide the degree " + std::to_string(n));
    inv.e = d.e;
    inv.f = d.f;
    inv.defect = n / (d.e * d.f);
    inv.rule = "declared";
    auto out = finish(inv, m);
    out.te2 = d.residue_separable;
    return out;
  }
  if (m->value_rank() != 1) fail(ErrorCode::Unsupported, "rank-2 bases need declared value data");
  if (auto a = artin_schreier_rhs(h)) return finish(artin_schreier_rule(m, *a), m);

  // single slope: v(a_i) >= (n - i) v(a_0)/n
  const Element& a0 = h.coeff(0);
  if (!a0.is_zero()) {
    Value g = checked_value(a0, "constant term").scaled(Rational(1, n));
    bool one_slope = true;
    for (long i = 1; i < n; ++i) {
      const auto& c = h.coeff(static_cast<std::size_t>(i));
      if (c.is_zero() && c.is_exact()) continue;
      if (checked_value(c, "coefficient " + std::to_string(i)) < g.scaled(Rational(n - i))) one_slope = false;
    }
    if (one_slope && order_mod(m->value_group().coords[0], g.q(), n) == n) {
      inv.e = n;
      inv.rule = "newton polygon with one slope " + g.str() + " of order " + std::to_string(n);
      return finish(inv, m);
    }
  }
  if (auto r = reduce(h); r && r->degree() == n && gf_is_irreducible(*r)) {
    inv.f = n;
    inv.rule = "irreducible reduction";
    return finish(inv, m);
  }
  fail(ErrorCode::Unsupported, "no rule decides " + h.str("X") + "; declare e and f");
}

bool tame_check(const ExtensionInvariants& inv, long p) {
  bool te1 = p == 0 || inv.e % p != 0;
  return te1 && inv.te2 && inv.defect == 1;
}

HenselVerdict henselian_element_test(const Poly& h, Element::Coeff eta) {
  const auto& m = h.model();
  if (m->kind() == ModelKind::IteratedSeries) fail(ErrorCode::Unsupported, "henselian element test runs on rank-1 models");
  if (h.degree() < 1 || !(h.coeff(static_cast<std::size_t>(h.degree())) - Element::one(m)).is_zero())
    fail(ErrorCode::Precondition, "h must be monic of degree >= 1");
  auto r = reduce(h);
  if (!r) return {false, "a coefficient has negative value"};
  const auto& F = *m->residue_field();
  if (eta >= F.order()) fail(ErrorCode::Precondition, "residue " + std::to_string(eta) + " is not in the residue field");
  if (r->eval(eta) != 0) return {false, "residue " + F.str(eta) + " is not a root of the reduction"};
  if (r->derivative().eval(eta) == 0) return {false, "residue " + F.str(eta) + " is a multiple root of the reduction"};
  return {true, "integral, simple residue root " + F.str(eta)};
}

// ---- composite places ---------------------------------------------------------

std::string CompositeStep::str() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::ConstantField: return "constant field degree " + std::to_string(degree);
    case Kind::TRoot: return "t^(1/" + std::to_string(degree) + ")";
    case Kind::URoot: return "u^(1/" + std::to_string(degree) + ")";
  }
  return "";
}

namespace {

void require_rank_two(const ModelPtr& L) {
  if (L->kind() != ModelKind::IteratedSeries) fail(ErrorCode::Unsupported, "composite check needs F_q((u))((t))");
}

struct Accumulated {
  long t_den = 1, u_den = 1, k = 1;
};

Accumulated accumulate(const std::vector<CompositeStep>& steps) {
  Accumulated a;
  for (const auto& s : steps) {
    if (s.degree < 1) fail(ErrorCode::Precondition, "step degree must be >= 1");
    switch (s.kind) {
      case CompositeStep::Kind::Trivial: break;
      case CompositeStep::Kind::ConstantField: a.k = std::lcm(a.k, s.degree); break;
      case CompositeStep::Kind::TRoot: a.t_den = std::lcm(a.t_den, s.degree); break;
      case CompositeStep::Kind::URoot: a.u_den = std::lcm(a.u_den, s.degree); break;
    }
  }
  return a;
}

}  // namespace

ImmediacyVerdict composite_immediate_check(const ModelPtr& L, const std::vector<CompositeStep>& steps) {
  require_rank_two(L);
  const auto& group = L->value_group();
  // values of the adjoined generators under P = Q1 Q2
  for (const auto& s : steps) {
    Value v;
    if (s.kind == CompositeStep::Kind::TRoot) v = Value(make_rational(1, s.degree), Rational(0));
    else if (s.kind == CompositeStep::Kind::URoot) v = Value(Rational(0), make_rational(1, s.degree));
    else continue;
    if (!group.contains(v)) return {false, "value " + v.str() + " of " + s.str() + " is not in vL"};
  }
  long k = accumulate(steps).k;
  if (k > 1) return {false, "residue field of P grows by degree " + std::to_string(k)};
  return {true, "value group and residue field of P unchanged"};
}

ImmediacyVerdict layerwise_immediate_check(const ModelPtr& L, const std::vector<CompositeStep>& steps) {
  require_rank_two(L);
  const auto& t_group = L->value_group().coords[0];
  const auto& u_group = L->value_group().coords[1];
  Accumulated a = accumulate(steps);
  long idx1 = order_mod(t_group, make_rational(1, a.t_den), a.t_den);
  if (idx1 > 1) return {false, "Q1 value index " + std::to_string(idx1)};
  // (L'Q1 | LQ1, Q2) = F_q^k((u^(1/m))) over F_q((u))
  if (a.k > 1) return {false, "Q2-layer residue degree " + std::to_string(a.k)};
  long idx2 = order_mod(u_group, make_rational(1, a.u_den), a.u_den);
  if (idx2 > 1) return {false, "Q2-layer value index " + std::to_string(idx2)};
  return {true, "both layers immediate"};
}

// ---- catalogs -----------------------------------------------------------------

namespace {

Poly xpoly(const ModelPtr& m, std::vector<Element> c) { return Poly(m, std::move(c)); }

Element tpow(const ModelPtr& m, long num, long den = 1) { return Element::monomial(m, 1, Value::of(num, den)); }

ordval::GroupCoordinate coord(ordval::Divisibility kind, long p, long den = 1) { return {kind, p, den}; }

// monic irreducible of degree k over the residue field, searched in order
GfPoly irreducible_over(const FieldPtr& F, long k) {
  std::vector<FiniteField::Elem> c(static_cast<std::size_t>(k + 1), 0);
  c[static_cast<std::size_t>(k)] = 1;
  std::uint64_t total = 1;
  for (long i = 0; i < k; ++i) total *= F->order();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (long i = 0; i < k; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elem>(x % F->order());
      x /= F->order();
    }
    GfPoly g{F, c};
    if (gf_is_irreducible(g)) return g;
  }
  fail(ErrorCode::Unsupported, "no irreducible polynomial found");
}

Poly lift(const ModelPtr& m, const GfPoly& g) {
  std::vector<Element> c;
  for (auto x : g.c) c.push_back(Element::lift_residue(m, x));
  return Poly(m, std::move(c));
}

}  // namespace

std::vector<CatalogEntry> extension_catalog() {
  using D = ordval::GroupDescriptor;
  auto f2 = FieldModel::series(2, 1, D::integers());
  auto f3 = FieldModel::series(3, 1, D::integers());
  auto f5 = FieldModel::series(5, 1, D::integers());
  auto h2 = FieldModel::perfect_hull(2);
  auto h3 = FieldModel::perfect_hull(3);
  auto q2 = FieldModel::padic(2);
  auto q3 = FieldModel::padic(3);
  auto e2 = FieldModel::padic(2, {Integer(-2), Integer(0), Integer(1)});
  auto one = [](const ModelPtr& m) { return Element::one(m); };
  auto zero = [](const ModelPtr& m) { return Element::zero(m); };
  auto num = [](const ModelPtr& m, long n) { return Element::from_integer(m, n); };
  auto as = [&](const ModelPtr& m, const Element& a) {
    long p = m->p();
    std::vector<Element> c(static_cast<std::size_t>(p + 1), zero(m));
    c[0] = -a;
    c[1] = -one(m);
    c[static_cast<std::size_t>(p)] = one(m);
    return Poly(m, c);
  };
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, ModelPtr m, Poly h, long e, long f, long d, bool t1, bool t2, bool t3,
                 std::optional<DeclaredData> decl = std::nullopt) {
    out.push_back({std::move(name), {std::move(m), std::move(h), decl}, e, f, d, t1, t2, t3});
  };
  add("X^2 - t over F_3((t))", f3, xpoly(f3, {-tpow(f3, 1), zero(f3), one(f3)}), 2, 1, 1, true, true, true);
  add("X^2 - t over F_2((t))", f2, xpoly(f2, {-tpow(f2, 1), zero(f2), one(f2)}), 2, 1, 1, false, true, true);
  add("X^3 - t over F_2((t))", f2, xpoly(f2, {-tpow(f2, 1), zero(f2), zero(f2), one(f2)}), 3, 1, 1, true, true, true);
  add("X^4 - t^3 over F_5((t))", f5, xpoly(f5, {-tpow(f5, 3), zero(f5), zero(f5), zero(f5), one(f5)}), 4, 1, 1, true,
      true, true);
  add("X^3 - t over the perfect hull of F_2((t))", h2, xpoly(h2, {-tpow(h2, 1), zero(h2), zero(h2), one(h2)}), 3, 1,
      1, true, true, true);
  add("X^2 + X + 1 over F_2((t))", f2, xpoly(f2, {one(f2), one(f2), one(f2)}), 1, 2, 1, true, true, true);
  add("X^2 + 1 over F_3((t))", f3, xpoly(f3, {one(f3), zero(f3), one(f3)}), 1, 2, 1, true, true, true);
  add("X^2 - X - t^-1 over F_2((t))", f2, as(f2, tpow(f2, -1)), 2, 1, 1, false, true, true);
  add("X^2 - X - t^-2 over F_2((t))", f2, as(f2, tpow(f2, -2)), 2, 1, 1, false, true, true);
  add("X^3 - X - t^-1 over F_3((t))", f3, as(f3, tpow(f3, -1)), 3, 1, 1, false, true, true);
  add("X^3 - X - (t^-3 + t^-1) over F_3((t))", f3, as(f3, tpow(f3, -3) + tpow(f3, -1)), 3, 1, 1, false, true, true);
  add("X^2 - X - 1 over F_2((t))", f2, as(f2, one(f2)), 1, 2, 1, true, true, true);
  add("X^2 - X - t^-1 over the perfect hull of F_2((t))", h2, as(h2, tpow(h2, -1)), 1, 1, 2, true, true, false);
  add("X^2 - X - (t^-3 + t^-1/2) over the perfect hull of F_2((t))", h2, as(h2, tpow(h2, -3) + tpow(h2, -1, 2)), 1, 1,
      2, true, true, false);
  add("X^3 - X - 2 t^-1 over the perfect hull of F_3((t))", h3, as(h3, tpow(h3, -1) * num(h3, 2)), 1, 1, 3, true, true,
      false);
  add("X^3 - X - t^-5/3 over the perfect hull of F_3((t))", h3, as(h3, tpow(h3, -5, 3)), 1, 1, 3, true, true, false);
  add("X^2 - 2 over Q_2", q2, xpoly(q2, {num(q2, -2), zero(q2), one(q2)}), 2, 1, 1, false, true, true);
  add("X^2 - 3 over Q_3", q3, xpoly(q3, {num(q3, -3), zero(q3), one(q3)}), 2, 1, 1, true, true, true);
  add("X^3 - 2 over Q_2", q2, xpoly(q2, {num(q2, -2), zero(q2), zero(q2), one(q2)}), 3, 1, 1, true, true, true);
  add("X^2 + X + 1 over Q_2", q2, xpoly(q2, {one(q2), one(q2), one(q2)}), 1, 2, 1, true, true, true);
  add("X^2 - pi over Q_2(2^(1/2))", e2, xpoly(e2, {-Element::uniformizer(e2), zero(e2), one(e2)}), 2, 1, 1, false,
      true, true);
  add("declared degree 4, e = 2, f = 1 over F_2((t))", f2,
      xpoly(f2, {tpow(f2, 1), zero(f2), zero(f2), zero(f2), one(f2)}), 2, 1, 2, false, true, false, DeclaredData{2, 1, true});
  add("declared degree 9, e = 1, f = 1 over the perfect hull of F_3((t))", h3,
      xpoly(h3, {tpow(h3, 1), zero(h3), zero(h3), zero(h3), zero(h3), zero(h3), zero(h3), zero(h3), zero(h3), one(h3)}),
      1, 1, 9, true, true, false, DeclaredData{1, 1, true});
  return out;
}

std::vector<CompositeEntry> composite_catalog() {
  using K = CompositeStep::Kind;
  using ordval::Divisibility;
  std::vector<std::pair<std::string, ModelPtr>> bases = {
      {"F_2((u))((t))", FieldModel::iterated(2, 1, coord(Divisibility::Integers, 2), coord(Divisibility::Integers, 2))},
      {"F_3((u))((t))", FieldModel::iterated(3, 1, coord(Divisibility::Integers, 3), coord(Divisibility::Integers, 3))},
      {"F_2((u))((t^(1/2^inf)))",
       FieldModel::iterated(2, 1, coord(Divisibility::PDivisible, 2), coord(Divisibility::Integers, 2))},
      {"F_2((u^(1/2^inf)))((t))",
       FieldModel::iterated(2, 1, coord(Divisibility::Integers, 2), coord(Divisibility::PDivisible, 2))},
      {"F_4((u))((t^(1/6)))", FieldModel::iterated(2, 2, coord(Divisibility::Integers, 2, 6), coord(Divisibility::Integers, 2))},
  };
  std::vector<CompositeStep> singles = {{K::Trivial, 1},       {K::ConstantField, 2}, {K::ConstantField, 3},
                                        {K::TRoot, 2},         {K::TRoot, 3},         {K::URoot, 2},
                                        {K::URoot, 3},         {K::URoot, 4}};
  std::vector<CompositeEntry> out;
  for (const auto& [name, L] : bases) {
    for (const auto& s : singles) out.push_back({name + " | " + s.str(), L, {s}});
    for (const auto& s : singles)
      for (const auto& t : singles) out.push_back({name + " | " + s.str() + ", " + t.str(), L, {s, t}});
  }
  return out;
}

bool TowerCheck::multiplicative() const {
  return whole.degree == first.degree * second.degree && whole.e == first.e * second.e &&
         whole.f == first.f * second.f && whole.defect == first.defect * second.defect;
}

std::vector<TowerCheck> tower_checks(long p) {
  struct Step {
    bool root;  // t^(1/n) or constant field of degree n
    long n;
  };
  std::vector<Step> steps = {{false, 2}, {false, 3}, {true, 2}, {true, 3}, {true, 4}};
  auto classify = [&](long k, long den, const Step& s) {
    // base F_(p^k)((t^(1/den)))
    ordval::GroupDescriptor g = ordval::GroupDescriptor::integers();
    g.coords[0].denominator = den;
    auto m = FieldModel::series(p, static_cast<int>(k), g);
    Poly h(m);
    if (s.root) {
      std::vector<Element> c(static_cast<std::size_t>(s.n + 1), Element::zero(m));
      c[0] = -tpow(m, 1, den);
      c[static_cast<std::size_t>(s.n)] = Element::one(m);
      h = Poly(m, c);
    } else {
      h = lift(m, irreducible_over(m->residue_field(), s.n));
    }
    return extension_invariants({m, h, std::nullopt});
  };
  auto label = [](const Step& s) { return s.root ? "t-root " + std::to_string(s.n) : "constant field " + std::to_string(s.n); };
  std::vector<TowerCheck> out;
  for (const auto& a : steps)
    for (const auto& b : steps) {
      long k1 = a.root ? 1 : a.n, d1 = a.root ? a.n : 1;
      TowerCheck tc;
      tc.name = "F_" + std::to_string(p) + "((t)): " + label(a) + ", then " + label(b);
      tc.first = classify(1, 1, a);
      tc.second = classify(k1, d1, b);
      // whole tower from its value group index and residue degree
      long K = k1 * (b.root ? 1 : b.n), N = d1 * (b.root ? b.n : 1);
      ExtensionInvariants w;
      w.degree = K * N;
      w.e = order_mod(ordval::GroupCoordinate{}, make_rational(1, N), N);
      w.f = K;
      w.defect = w.degree / (w.e * w.f);
      w.rule = "value group index and residue degree";
      w.p = p;
      w.te1 = w.e % p != 0;
      w.te3 = w.defect == 1;
      tc.whole = w;
      out.push_back(tc);
    }
  return out;
}

}  // namespace ramlab::ext
