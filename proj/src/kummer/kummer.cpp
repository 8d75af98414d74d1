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
#include "ramlab/kummer.hpp"

#include <algorithm>
#include <sstream>

#include "ramlab/asnf.hpp"

namespace ramlab::kummer {

namespace {

Element canonical(const Element& c, const Value& modulus) {
  Element r = c.truncated(modulus);
  const auto& m = c.model();
  if (m->kind() == ModelKind::Padic) return Element::padic(m, r.padic_coeffs(), Value::infinity(1));
  return Element::series(m, r.terms(), Value::infinity(m->value_rank()));
}

Poly reduce_mod(const Poly& f, const Value& modulus) {
  std::vector<Element> out;
  for (const auto& c : f.coeffs()) {
    if (c.value_lower_bound() >= modulus) out.push_back(Element::zero(f.model()));
    else out.push_back(canonical(c, modulus));
  }
  return Poly(f.model(), std::move(out));
}

}  // namespace

Poly geo_inverse(const Poly& u, const Value& modulus) {
  const auto& m = u.model();
  if (m->characteristic() != 0) fail(ErrorCode::ModelMismatch, "geo_inverse works over a p-adic model");
  Element one = Element::one(m);
  Poly w = u - Poly::constant(one);
  Value zero(Rational(0));
  for (const auto& c : w.coeffs()) {
    if (c.precision() < modulus)
      fail(ErrorCode::InsufficientPrecision, "coefficient " + c.str() + " is not known up to value " + modulus.str());
    if (!(c.value_lower_bound() > zero)) fail(ErrorCode::Precondition, u.str("y") + " is not a 1-unit");
  }
  Poly neg = reduce_mod(-w, modulus);
  Poly s = Poly::constant(one);
  Poly term = s;
  while (true) {
    term = reduce_mod(term * neg, modulus);
    if (term.is_zero()) break;
    s = reduce_mod(s + term, modulus);
  }
  return s;
}

std::string ValueMonomialSystem::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, v] : entries) {
    os << (first ? "" : ", ") << i << " -> " << v.str();
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<long, std::vector<Contribution>> contributions_of(const ValueMonomialSystem& sys) {
  ordval::DeltaContext ctx(sys.p, sys.vp);
  std::map<long, std::vector<Contribution>> out;
  for (const auto& [j, v] : sys.entries) {
    long i = j, mm = 0;
    while (i % sys.p == 0 && i > 0) {
      i /= sys.p;
      ++mm;
    }
    out[i].push_back({j, mm, ctx.delta_iter(mm, v)});
  }
  for (auto& [i, cs] : out)
    std::sort(cs.begin(), cs.end(), [](const Contribution& a, const Contribution& b) { return a.m < b.m; });
  return out;
}

std::optional<MergeEvent> find_collision(const ValueMonomialSystem& sys) {
  for (const auto& [i, cs] : contributions_of(sys)) {
    if (i == 0) continue;
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = a + 1; b < cs.size(); ++b)
        if (cs[a].value == cs[b].value) return MergeEvent{i, cs[a].source, cs[b].source, cs[a].value, std::nullopt};
  }
  return std::nullopt;
}

FoldResult value_sim_fold(ValueMonomialSystem sys, const MergeResolver& resolver) {
  if (sys.p < 2) fail(ErrorCode::Precondition, "p must be a prime");
  for (const auto& [i, v] : sys.entries) {
    if (i < 0) fail(ErrorCode::Precondition, "negative index " + std::to_string(i));
    if (!(v > sys.vp)) fail(ErrorCode::Precondition, "entry " + std::to_string(i) + " has value " + v.str() + " <= v(p)");
  }
  ordval::DeltaContext ctx(sys.p, sys.vp);
  FoldResult out;
  std::size_t guard = sys.count();
  while (auto ev = find_collision(sys)) {
    long steps = 0;
    for (long k = ev->low; k < ev->high; k *= sys.p) ++steps;
    // every Delta^-1 step needs delta^-1 of the current value > v(p)
    Value cur = sys.entries.at(ev->low);
    for (long s = 0; s < steps; ++s) {
      cur = ctx.delta_inverse(cur);
      if (!(cur > sys.vp))
        fail(ErrorCode::GuardViolation, "collision at index " + std::to_string(ev->target) + " has no legal merge");
    }
    std::size_t before = sys.count();
    ev->merged = resolver ? resolver(*ev) : std::optional<Value>(sys.entries.at(ev->high));
    sys.entries.erase(ev->low);
    if (ev->merged) {
      if (!(*ev->merged > sys.vp))
        fail(ErrorCode::GuardViolation, "merged value " + ev->merged->str() + " is not > v(p)");
      sys.entries[ev->high] = *ev->merged;
    } else {
      sys.entries.erase(ev->high);
    }
    sys.history.push_back("merge " + std::to_string(ev->low) + " into " + std::to_string(ev->high) + " at value " +
                          ev->common.str() + " -> " + (ev->merged ? ev->merged->str() : std::string("0")));
    out.merges.push_back(*ev);
    if (sys.count() >= before) fail(ErrorCode::GuardViolation, "merge did not reduce the monomial count");
    if (out.merges.size() > guard) fail(ErrorCode::GuardViolation, "more merges than initial monomials");
  }
  out.contributions = contributions_of(sys);
  for (const auto& [i, cs] : out.contributions) {
    Value lo = cs.front().value;
    for (const auto& c : cs) lo = min(lo, c.value);
    out.min_value.emplace(i, lo);
  }
  out.system = std::move(sys);
  return out;
}

TerminationReport value_sim_terminates(const ValueMonomialSystem& sys, const MergeResolver& resolver) {
  TerminationReport r;
  r.initial_count = sys.count();
  std::size_t last = sys.count();
  r.result = value_sim_fold(sys, resolver);
  // replay counts from the merge log
  ValueMonomialSystem replay = sys;
  for (const auto& ev : r.result.merges) {
    replay.entries.erase(ev.low);
    if (ev.merged) replay.entries[ev.high] = *ev.merged;
    else replay.entries.erase(ev.high);
    r.counts.push_back(replay.count());
    if (replay.count() >= last) r.monotone = false;
    last = replay.count();
  }
  if (!r.monotone || r.result.merges.size() > r.initial_count)
    fail(ErrorCode::GuardViolation, "monomial count did not decrease");
  return r;
}

std::string KummerNormalForm::g_str() const { return Poly(f.model(), a).str("z"); }

bool KummerNormalForm::chain_verified() const {
  for (const auto& e : chain)
    if (!e.witness.verify()) return false;
  return true;
}

bool KummerNormalForm::membership_verified() const {
  if (membership.empty()) return kase == 0;
  for (const auto& mc : membership)
    if (!mc.verified) return false;
  return true;
}

std::string trace_disagreement(const KummerNormalForm& nf) {
  if (nf.kase != 2) return "";
  std::size_t k = 0;
  MergeResolver feed = [&](const MergeEvent&) -> std::optional<Value> {
    return k < nf.trace.merges.size() ? nf.trace.merges[k++].merged : std::nullopt;
  };
  FoldResult sim = value_sim_fold(nf.trace.initial, feed);
  if (sim.merges.size() != nf.trace.merges.size())
    return "simulator made " + std::to_string(sim.merges.size()) + " merges, exact run " +
           std::to_string(nf.trace.merges.size());
  for (std::size_t i = 0; i < sim.merges.size(); ++i) {
    const auto& a = sim.merges[i];
    const auto& b = nf.trace.merges[i];
    if (a.target != b.target || a.low != b.low || a.high != b.high || a.common != b.common || a.merged != b.merged)
      return "merge " + std::to_string(i + 1) + " differs";
  }
  if (sim.contributions.size() != nf.trace.contributions.size()) return "contribution tables differ in size";
  for (const auto& [i, cs] : sim.contributions) {
    auto it = nf.trace.contributions.find(i);
    if (it == nf.trace.contributions.end() || it->second.size() != cs.size())
      return "contributions to index " + std::to_string(i) + " differ";
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (cs[j].source != it->second[j].source || cs[j].m != it->second[j].m || cs[j].value != it->second[j].value)
        return "contribution " + std::to_string(cs[j].source) + " -> " + std::to_string(i) + " differs";
  }
  return "";
}

KummerShape KummerNormalForm::shape() const {
  KummerShape s;
  const auto& m = f.model();
  Value zero(Rational(0));
  Value bound = m->vp().scaled(Rational(2));
  s.unit_z = !d.is_zero() && d.value() == gamma;
  if (!s.unit_z) s.problems.push_back("v(x - c) != v(d)");
  s.maximal_ideal = s.deleted_above_bound = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!(a[i].value() > zero)) {
      s.maximal_ideal = false;
      s.problems.push_back("a_" + std::to_string(i) + " is not in the maximal ideal");
    }
    if (a[i].value() > bound) {
      s.deleted_above_bound = false;
      s.problems.push_back("a_" + std::to_string(i) + " has value above " + bound.str());
    }
  }
  std::vector<std::optional<Value>> vals;
  for (std::size_t i = 1; i < a.size(); ++i)
    vals.push_back(a[i].is_zero() ? std::nullopt : std::optional<Value>(a[i].value()));
  auto crit = asnf::generator_criterion(vals, 2);
  s.unique_least = crit.holds;
  if (!crit.holds) s.problems.push_back(crit.reason);
  return s;
}

namespace {

struct Pending {
  std::string step;
  std::string detail;
  std::function<Witness(const Element&)> make;
};

void require_two_adic_model(const ModelPtr& m) {
  if (m->kind() != ModelKind::Padic || m->p() != 2)
    fail(ErrorCode::Unsupported, "the exact Kummer engine runs over 2-adic fields only");
}

Element sqrt_or_fail(const Element& d, const std::string& name, const Value& target) {
  auto r = is_pth_power(d, d.is_exact() ? std::nullopt : std::optional<Value>(target));
  if (r.verdict == PowerVerdict::No)
    fail(ErrorCode::SquareRootUnavailable, name + " = " + d.str() + " is not a square");
  if (r.verdict == PowerVerdict::Insufficient) fail(ErrorCode::InsufficientPrecision, name + ": " + r.reason);
  return *r.root;
}

// y-stream: y = (x - c1)/a, approximant k <-> x-approximant first + k
ApproximationType shifted_stream(ApproximationType& at, std::size_t first, const Element& c1, const Element& a) {
  const auto& m = at.model();
  Element ainv = a.inverse();
  if (at.ambient()) return ApproximationType::from_ambient(m, (*at.ambient() - c1) * ainv);
  std::vector<Approximant> items;
  for (std::size_t nu = first; nu < at.size(); ++nu)
    items.push_back({(at.at(nu).c - c1) * ainv, at.at(nu).gamma - a.value()});
  return ApproximationType(m, std::move(items));
}

// Deletes every monomial of value > bound measured in z = (y - c2)/b, i.e.
// coefficient of z^i. H stays a polynomial in y; each deletion records a
// witness from shift a)
void delete_high(Poly& H, const Element& c2, const Element& b, const Value& bound, std::vector<Pending>& pending) {
  const auto& m = H.model();
  Element binv = b.inverse();
  Poly lin(m, {-c2 * binv, binv});  // z as a polynomial in y
  Poly Hz = H.substitute_linear(c2, b);
  for (std::size_t i = 0; i < Hz.coeffs().size(); ++i) {
    Element ci = Hz.coeff(i);
    if (ci.is_zero() && ci.is_exact()) continue;
    if (!ci.value_known() && !(ci.precision() > bound))
      fail(ErrorCode::InsufficientPrecision,
           "coefficient of z^" + std::to_string(i) + " vanishes at precision " + ci.precision().str());
    if (ci.value_known() && !(ci.value() > bound)) continue;
    Poly T = lin.pow(static_cast<unsigned long>(i)).scaled(ci);
    Poly rest = H - T;
    pending.push_back({"delete", "drop " + (i == 0 ? ci.str() : ci.str() + "*z^" + std::to_string(i)),
                       [rest, T](const Element& y) { return one_unit_shift_a(rest.eval(y), T.eval(y)); }});
    H = rest;
  }
}

struct SecondStage {
  Poly H;  // in y, after merges, folds and deletions
  Element c2;
  Element b;
  Value gamma2;
  std::size_t index;  // chosen approximant of the y-stream
};

// Admissible-pair loop on 1 + gt(y), every coefficient of gt of value > v(p).
SecondStage second_case(const Poly& gt, ApproximationType& ys, std::size_t confirmations, KummerNormalForm& nf,
                        std::vector<Pending>& pending) {
  const auto& m = gt.model();
  const Value vp = m->vp();
  const Value bound = vp.scaled(Rational(2));
  const Value target = Value::of(kDefaultWorkingPrecision);
  Element one = Element::one(m);
  auto h = asnf::hasse_taylor(gt);
  std::optional<Value> thr2;
  auto stab = [&](long k) {
    auto cert = stabilize(ys, h[k], confirmations);
    cert.h = "h_" + std::to_string(k) + " = " + cert.h;
    nf.stabilizations.push_back(cert);
    thr2 = thr2 ? max(*thr2, cert.alpha0) : cert.alpha0;
    return cert.stable_value;
  };
  ValueMonomialSystem sys{2, vp, {}, {}};
  // the constant term plays no part in the merges, so its value is not pinned
  for (long k = 1; k <= gt.degree(); ++k) {
    if (h[k].is_zero()) continue;
    Value v = stab(k);
    if (v.is_infinite()) continue;
    if (!(v > vp)) fail(ErrorCode::CertificationFailed, "second case: v h_" + std::to_string(k) + "(c) is not > v(p)");
    sys.entries.emplace(k, v);
  }
  nf.trace.initial = sys;

  // merges: the lower monomial is raised by Delta^-1 onto the higher index
  struct Merge {
    long low, high;
    Poly hlow;
  };
  std::vector<Merge> merges;
  Element mhalf = Element::from_rational(m, Rational(-1, 2));
  ordval::DeltaContext ctx(2, vp);
  while (auto ev = find_collision(sys)) {
    Value cur = sys.entries.at(ev->low);
    for (long k = ev->low; k < ev->high; k *= 2) {
      cur = ctx.delta_inverse(cur);
      if (!(cur > vp))
        fail(ErrorCode::GuardViolation, "collision at index " + std::to_string(ev->target) + " has no legal merge");
    }
    Poly raised = h[ev->low];
    for (long k = ev->low; k < ev->high; k *= 2) {
      raised = raised.scaled(mhalf);
      raised = raised * raised;
    }
    merges.push_back({ev->low, ev->high, h[ev->low]});
    h[ev->high] = h[ev->high] + raised;
    h[ev->low] = Poly(m);
    sys.entries.erase(ev->low);
    if (!h[ev->high].is_zero()) {
      Value v = stab(ev->high);
      if (!v.is_infinite()) ev->merged = v;
    }
    if (ev->merged) sys.entries[ev->high] = *ev->merged;
    else sys.entries.erase(ev->high);
    nf.trace.merges.push_back(*ev);
    if (nf.trace.merges.size() > nf.trace.initial.count())
      fail(ErrorCode::GuardViolation, "merge loop exceeded the monomial count");
  }
  nf.trace.contributions = contributions_of(sys);
  std::map<long, Value> rho;
  for (const auto& [i, cs] : nf.trace.contributions) {
    if (i == 0) continue;
    Value lo = cs.front().value;
    for (const auto& c : cs) lo = min(lo, c.value);
    rho.emplace(i, lo);
  }
  std::vector<LinearConstraint> cs2;
  for (const auto& [i, r] : rho)
    for (const auto& [j, rj] : rho)
      if (j > i)
        cs2.push_back({Rational(j - i), rj - r, Relation::NotEqual,
                       "folded monomials " + std::to_string(i) + " and " + std::to_string(j) + " distinct"});
  CenterChoice cc = choose_center(ys, cs2, thr2);
  SecondStage st{gt, cc.c, Element::of_value(m, cc.gamma), cc.gamma, cc.index};
  const Element& c2 = st.c2;
  Poly& H = st.H;

  // replay at Z = c2 with witnesses
  Poly Yc(m, {-c2, one});  // y - c2
  for (const auto& mg : merges) {
    long idx = mg.low;
    Element coef = mg.hlow.eval(c2);
    Poly T = Yc.pow(static_cast<unsigned long>(idx)).scaled(coef);
    while (idx < mg.high) {
      Poly others = H - T;
      pending.push_back({"merge", "Delta^-1 on index " + std::to_string(idx) + " toward " + std::to_string(mg.high),
                         [others, T](const Element& y) { return rewrite_delta_inverse(others.eval(y), T.eval(y)).second; }});
      Element half = coef * mhalf;
      coef = half * half;
      idx *= 2;
      T = Yc.pow(static_cast<unsigned long>(idx)).scaled(coef);
      H = others + T;
    }
  }
  for (long k = 2; k < static_cast<long>(h.size()); k += 2) {
    if (h[k].is_zero()) continue;
    Element hk = h[k].eval(c2);
    if (hk.is_zero()) continue;
    long idx = k;
    Element coef = hk;
    Poly T = Yc.pow(static_cast<unsigned long>(idx)).scaled(coef);
    while (idx % 2 == 0) {
      Element r = sqrt_or_fail(coef, "h_" + std::to_string(k) + "(c_2) at fold index " + std::to_string(idx), target);
      idx /= 2;
      Poly C = Yc.pow(static_cast<unsigned long>(idx)).scaled(r);
      Poly others = H - T;
      pending.push_back({"fold", "Delta on index " + std::to_string(idx * 2),
                         [others, C](const Element& y) { return one_unit_shift_c(others.eval(y), C.eval(y)); }});
      coef = r.scaled(-2);
      T = C.scaled(Element::from_integer(m, -2));
      H = others + T;
    }
  }
  Poly W = H.substitute_linear(c2, one);
  for (const auto& [i, r] : rho) {
    Element ri = W.coeff(static_cast<std::size_t>(i));
    if (!ri.value_known() || ri.value() != r)
      fail(ErrorCode::CertificationFailed, "v r_" + std::to_string(i) + "(c_2) differs from the folded value " + r.str());
  }
  delete_high(H, c2, st.b, bound, pending);
  return st;
}

// Fills a, i0, strengthenings, the witness chain (evaluated at y_of(x) for
// the approximant after the centre) and the membership checks.
void finish(KummerNormalForm& nf, const Poly& Hz, ApproximationType& at, const std::function<Element(const Element&)>& y_of,
            const std::vector<Pending>& pending) {
  const auto& m = nf.f.model();
  const Value vp = m->vp();
  const Value target = Value::of(kDefaultWorkingPrecision);
  Element one = Element::one(m);
  nf.a = Hz.coeffs();
  while (!nf.a.empty() && nf.a.back().is_zero()) nf.a.pop_back();
  std::vector<std::optional<Value>> vals;
  for (std::size_t i = 1; i < nf.a.size(); ++i)
    vals.push_back(nf.a[i].is_zero() ? std::nullopt : std::optional<Value>(nf.a[i].value()));
  auto crit = asnf::generator_criterion(vals, 2);
  if (crit.holds) nf.i0 = crit.i0;

  // strengthenings: 2 does not divide j when v a_j <= v(2); all 2-free with distinct values when v a_i0 > v(2)
  if (nf.i0) {
    bool s1 = true, s2 = true;
    std::vector<Value> seen;
    for (std::size_t j = 1; j < nf.a.size(); ++j) {
      if (nf.a[j].is_zero()) continue;
      if (j % 2 == 0 && nf.a[j].value() <= vp) s1 = false;
      if (j % 2 == 0 || std::find(seen.begin(), seen.end(), nf.a[j].value()) != seen.end()) s2 = false;
      seen.push_back(nf.a[j].value());
    }
    if (s1) nf.strengthenings.push_back("2 does not divide j whenever v(a_j) <= v(2)");
    if (nf.a[*nf.i0].value() > vp && s2) nf.strengthenings.push_back("all nonzero a_j have odd index and distinct values");
  }

  nf.eval_index = nf.center_index + 1;
  at.require(nf.eval_index + 1);
  Element y_ev = y_of(at.at(nf.eval_index).c);
  for (const auto& p : pending) nf.chain.push_back({p.step, p.detail, p.make(y_ev)});

  Poly g(m, nf.a);
  for (std::size_t k = 1; k <= kMembershipChecks; ++k) {
    std::size_t nu = nf.center_index + k;
    if (nu >= at.size() && !at.try_extend()) break;
    Element x = at.at(nu).c;
    Element z = (x - nf.c) * nf.d.inverse();
    Element lhs = one + nf.f.eval(x), rhs = one + g.eval(z);
    auto q = is_pth_power(lhs.divided_by(rhs, target), target);
    std::string claim = "(1 + f)/(1 + g) is a square at approximant " + std::to_string(nu + 1);
    if (q.verdict == PowerVerdict::Yes) {
      auto w = Witness::pth_power(claim, lhs, rhs, *q.root);
      nf.membership.push_back({nu, w, w.verify()});
    } else {
      nf.membership.push_back({nu, Witness::pth_power(claim, lhs, rhs, one), false});
    }
  }
}

}  // namespace

KummerNormalForm kummer_normal_form_p2(const Poly& f, ApproximationType& at, std::size_t confirmations) {
  const auto& m = f.model();
  require_two_adic_model(m);
  if (!same_model(m, at.model())) fail(ErrorCode::ModelMismatch, "polynomial and stream live in different models");
  if (!f.is_exact()) fail(ErrorCode::Precondition, "the Kummer engine needs exact coefficients");
  const Value vp = m->vp();
  const Value bound = vp.scaled(Rational(2));
  const Value target = Value::of(kDefaultWorkingPrecision);
  const Value zero(Rational(0));
  Element one = Element::one(m);
  at.require(1);
  KummerNormalForm nf{.f = f, .c = Element::zero(m), .d = Element::zero(m), .gamma = zero};
  if (f.is_zero()) {
    nf.c = at.at(0).c;
    nf.gamma = at.at(0).gamma;
    nf.d = Element::of_value(m, nf.gamma);
    return nf;
  }
  long n = f.degree();

  // first centre: values of f_i(c) fixed, monomials in the maximal ideal and
  // distinct, and v f_j(c)(x-c)^j < v f_i(c)(x-c)^i for j = 2^t, i = 2^t r
  auto tay = asnf::hasse_taylor(f);
  std::map<long, Value> beta;
  std::optional<Value> threshold;
  for (long i = 0; i <= n; ++i) {
    if (tay[i].is_zero()) continue;
    auto cert = stabilize(at, tay[i], confirmations);
    cert.h = "f_" + std::to_string(i) + " = " + cert.h;
    if (cert.stable_value.is_infinite())
      fail(ErrorCode::CertificationFailed, "f_" + std::to_string(i) + " vanishes along the stream");
    beta.emplace(i, cert.stable_value);
    threshold = threshold ? max(*threshold, cert.alpha0) : cert.alpha0;
    nf.stabilizations.push_back(cert);
  }
  if (beta.count(0) && !(beta.at(0) > zero))
    fail(ErrorCode::Precondition, "1 + f(x) is not a 1-unit: v f(c) = " + beta.at(0).str());
  std::vector<LinearConstraint> cs;
  for (const auto& [i, b] : beta) {
    if (i == 0) continue;
    cs.push_back({Rational(i), b, Relation::Greater, "v f_" + std::to_string(i) + "(c)(x-c)^" + std::to_string(i) + " > 0"});
    for (const auto& [j, bj] : beta)
      if (j > i)
        cs.push_back({Rational(j - i), bj - b, Relation::NotEqual,
                      "monomials " + std::to_string(i) + " and " + std::to_string(j) + " distinct"});
  }
  for (long j = 1; j <= n; j *= 2) {
    if (!beta.count(j)) continue;
    for (long i = 2 * j; i <= n; i += j)
      if (beta.count(i))
        cs.push_back({Rational(i - j), beta.at(i) - beta.at(j), Relation::Greater,
                      "monomial " + std::to_string(j) + " below monomial " + std::to_string(i)});
  }
  CenterChoice c1 = choose_center(at, cs, threshold);
  Element a = Element::of_value(m, c1.gamma);
  std::vector<Element> dcoef;
  Element ai = one;
  for (long i = 0; i <= n; ++i) {
    Element fi = tay[i].eval(c1.c);
    if (beta.count(i) && fi.value() != beta.at(i))
      fail(ErrorCode::CertificationFailed, "v f_" + std::to_string(i) + "(c_1) differs from its stabilized value");
    dcoef.push_back(fi * ai);
    ai *= a;
  }
  Poly F(m, dcoef);  // f(c1 + a y)

  // square roots of the even-index coefficients and the unit factor s(y)^2
  Poly A(m);
  for (long i = 0; i <= n; i += 2) {
    if (dcoef[i].is_zero()) continue;
    A += Poly::monomial(sqrt_or_fail(dcoef[i], "d_" + std::to_string(i), target), static_cast<std::size_t>(i / 2));
  }
  Poly s = geo_inverse(Poly::constant(one) + A, vp + Value(Rational(1, m->ramification())));
  Poly G = (s * s) * (Poly::constant(one) + F);
  Poly gt = (s * s) * (F - A * A - A.scaled(Element::from_integer(m, 2)));
  std::vector<Pending> pending;
  pending.push_back({"unit-factor", "multiply 1 + f by s(y)^2, s = " + s.str("y"),
                     [G, F, s, one](const Element& y) {
                       return Witness::pth_power("s(y)^2 (1 + f)", G.eval(y), one + F.eval(y), s.eval(y));
                     }});
  Poly rest = G - Poly::constant(one) - gt;
  pending.push_back({"delete", "drop s(y)^2 (1 + sum d_i^(1/2) y^(i/2))^2 - 1",
                     [gt, rest](const Element& y) { return one_unit_shift_a(gt.eval(y), rest.eval(y)); }});

  bool small = false;
  for (const auto& ci : gt.coeffs())
    if (ci.value_known() && !ci.is_zero() && ci.value() <= vp) small = true;

  Poly H = gt;
  Element c2 = Element::zero(m);
  Element b = one;
  Value gamma2 = zero;
  std::size_t center = c1.index;
  if (small) {
    nf.kase = 1;
    Value least = Value::infinity(1);
    std::vector<long> at_least;
    for (std::size_t i = 0; i < gt.coeffs().size(); ++i) {
      const auto& ci = gt.coeffs()[i];
      if (ci.is_zero()) continue;
      if (ci.value() < least) {
        least = ci.value();
        at_least = {static_cast<long>(i)};
      } else if (ci.value() == least) {
        at_least.push_back(static_cast<long>(i));
      }
    }
    if (at_least != std::vector<long>{1})
      fail(ErrorCode::CertificationFailed, "first case: the coefficient of y is not the unique least one");
    delete_high(H, c2, b, bound, pending);
  } else {
    nf.kase = 2;
    ApproximationType ys = shifted_stream(at, c1.index + 1, c1.c, a);
    SecondStage st = second_case(gt, ys, confirmations, nf, pending);
    H = st.H;
    c2 = st.c2;
    b = st.b;
    gamma2 = st.gamma2;
    center = c1.index + 1 + st.index;
  }

  // z = (y - c2)/b, x = c + d z
  nf.c = c1.c + a * c2;
  nf.d = a * b;
  nf.gamma = c1.gamma + gamma2;
  nf.center_index = center;
  Element ainv = a.inverse();
  Element cc1 = c1.c;
  finish(nf, H.substitute_linear(c2, b), at, [cc1, ainv](const Element& x) { return (x - cc1) * ainv; }, pending);
  return nf;
}

KummerNormalForm kummer_second_case_p2(const Poly& h, ApproximationType& at, std::size_t confirmations) {
  const auto& m = h.model();
  require_two_adic_model(m);
  if (!same_model(m, at.model())) fail(ErrorCode::ModelMismatch, "polynomial and stream live in different models");
  const Value vp = m->vp();
  for (const auto& c : h.coeffs())
    if (!c.is_zero() && !(c.value_lower_bound() > vp))
      fail(ErrorCode::Precondition, "coefficient " + c.str() + " of h does not have value > v(2)");
  at.require(1);
  for (const auto& ap : at.approximants())
    if (ap.c.is_zero() || ap.c.value() != Value(Rational(0)))
      fail(ErrorCode::Precondition, "the stream must consist of units");
  KummerNormalForm nf{.f = h, .c = Element::zero(m), .d = Element::zero(m), .gamma = Value(Rational(0))};
  nf.kase = 2;
  if (h.is_zero()) {
    nf.kase = 0;
    nf.c = at.at(0).c;
    nf.gamma = at.at(0).gamma;
    nf.d = Element::of_value(m, nf.gamma);
    return nf;
  }
  std::vector<Pending> pending;
  SecondStage st = second_case(h, at, confirmations, nf, pending);
  nf.c = st.c2;
  nf.d = st.b;
  nf.gamma = st.gamma2;
  nf.center_index = st.index;
  finish(nf, st.H.substitute_linear(st.c2, st.b), at, [](const Element& x) { return x; }, pending);
  return nf;
}

}  // namespace ramlab::kummer
