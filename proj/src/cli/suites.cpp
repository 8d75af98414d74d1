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
#include "ramlab/suites.hpp"

#include <sstream>

#include "ramlab/asnf.hpp"
#include "ramlab/corpus.hpp"
#include "ramlab/extcheck.hpp"
#include "ramlab/kummer.hpp"
#include "ramlab/rng.hpp"

namespace ramlab::suites {

std::size_t SuiteResult::passed() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

namespace {

std::string id_of(const std::string& prefix, std::size_t i) {
  std::ostringstream os;
  os << prefix << "-";
  os.width(4);
  os.fill('0');
  os << i;
  return os.str();
}

// delta straight from its definition, independent of DeltaContext
Rational delta_def(long p, const Rational& vp, const Rational& g) { return vp + g / p; }

// 2-adic square classes of nonzero rationals: even order and odd part = 1 mod 8
bool square_oracle(const Rational& q) {
  if (q == 0) return true;
  Integer num = q.get_num(), den = q.get_den();
  long k = 0;
  while (num % 2 == 0) {
    num /= 2;
    ++k;
  }
  while (den % 2 == 0) {
    den /= 2;
    --k;
  }
  if (k % 2 != 0) return false;
  Integer u = num * den;  // same class as num/den
  Integer r = u % 8;
  if (r < 0) r += 8;
  return r == 1;
}

Rational random_two_adic(Rng& rng, long min_order) {
  long k = rng.range(min_order, min_order + 5);
  long num = 2 * rng.range(0, 200) + 1;
  if (rng.coin()) num = -num;
  Rational q(num, 2 * rng.range(0, 30) + 1);
  q.canonicalize();
  for (long i = 0; i < k; ++i) q *= 2;
  return q;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

}  // namespace

SuiteResult delta(long p, std::uint64_t seed, std::size_t size) {
  SuiteResult r{"delta p=" + std::to_string(p), {}, 0, ""};
  Rng rng(seed);
  for (std::size_t n = 0; n < size; ++n) {
    Rational vp = make_rational(rng.range(1, 6), rng.range(1, 4));
    ordval::DeltaContext ctx(p, Value(vp));
    Rational a = make_rational(rng.range(-60, 60), rng.range(1, 16));
    Rational b = make_rational(rng.range(-60, 60), rng.range(1, 16));
    std::vector<std::string> bad;
    Rational fp = vp * p / (p - 1);
    if (ctx.fixed_point() != Value(fp)) bad.push_back("fixed point " + ctx.fixed_point().str());
    if (delta_def(p, vp, fp) != fp) bad.push_back("fixed point not fixed");
    if (a != b) {
      Rational lo = a < b ? a : b, hi = a < b ? b : a;
      if (!(ctx.delta(Value(lo)) < ctx.delta(Value(hi)))) bad.push_back("not strictly increasing");
    }
    if (a < fp && !(ctx.delta(Value(a)) > Value(a))) bad.push_back("delta(g) <= g below the fixed point");
    if (a > fp && !(ctx.delta(Value(a)) < Value(a))) bad.push_back("delta(g) >= g above the fixed point");
    Rational it = a;
    for (long i = 0; i <= 10; ++i) {
      if (ctx.delta_iter(i, Value(a)) != Value(it)) bad.push_back("closed form differs at i = " + std::to_string(i));
      if (ctx.delta_iter(-i, Value(it)) != Value(a)) bad.push_back("inverse law fails at i = " + std::to_string(i));
      it = delta_def(p, vp, it);
    }
    // negative iterates against g -> p (g - vp)
    Rational back = a;
    for (long i = 1; i <= 10; ++i) {
      back = (back - vp) * p;
      if (ctx.delta_iter(-i, Value(a)) != Value(back)) bad.push_back("inverse iterate differs at i = -" + std::to_string(i));
    }
    r.cases.push_back({id_of("delta", n), bad.empty(),
                       "vp = " + rational_str(vp) + ", g = " + rational_str(a) + (bad.empty() ? "" : ": " + join(bad))});
  }
  return r;
}

SuiteResult oneunit(char part, std::uint64_t seed, std::size_t size) {
  SuiteResult r{std::string("oneunit part ") + part, {}, 0, "Q_2 at precision 2^12"};
  auto m = FieldModel::padic(2);
  const Value prec = Value::of(12);
  Rng rng(seed);
  auto E = [&](const Rational& q) { return Element::from_rational(m, q); };
  for (std::size_t n = 0; n < size; ++n) {
    Rational b = random_two_adic(rng, 1);
    Rational c = random_two_adic(rng, part == 'a' ? 3 : 1);
    std::vector<std::string> bad;
    Witness w = part == 'a' ? one_unit_shift_a(E(b), E(c), prec) : one_unit_shift_c(E(b), E(c), prec);
    if (!w.verify()) bad.push_back("witness does not re-verify");
    Rational ratio = part == 'a' ? Rational((1 + b) / (1 + b + c)) : Rational((1 + b - 2 * c) / (1 + b + c * c));
    ratio.canonicalize();
    bool oracle = square_oracle(ratio);
    if (!oracle) bad.push_back("oracle says the ratio is not a square");
    auto verdict = is_pth_power(E(ratio), prec);
    if ((verdict.verdict == PowerVerdict::Yes) != oracle) bad.push_back("is_pth_power disagrees with the oracle");
    // an unrelated class: the verdict must still match the oracle
    Rational probe = b * 3 + 1;
    probe.canonicalize();
    if (probe != 0 && (is_pth_power(E(probe), prec).verdict == PowerVerdict::Yes) != square_oracle(probe))
      bad.push_back("is_pth_power disagrees with the oracle on 1 + 3b");
    r.cases.push_back({id_of(std::string("oneunit-") + part, n), bad.empty(),
                       "b = " + rational_str(b) + ", c = " + rational_str(c) + (bad.empty() ? "" : ": " + join(bad))});
  }
  return r;
}

SuiteResult asnf(long p, std::uint64_t seed, std::size_t size) {
  SuiteResult r{"asnf p=" + std::to_string(p), {}, 0, ""};
  if (p == 2) {
    auto at = xi_stream(2);
    const auto& m = at.model();
    Poly f = Poly::variable(m).pow(2).scaled(Element::monomial(m, 1, Value::of(-3)));
    auto nf = asnf::as_normal_form(f, at);
    bool ok = nf.g_str() == "t^-3/2 + t^-1*z" && nf.c.str() == "1" && nf.d.str() == "t^1/2" && nf.identity_holds();
    r.cases.push_back({"asnf-worked", ok, "f = t^-3*x^2 -> g = " + nf.g_str() + ", c = " + nf.c.str() + ", d = " + nf.d.str()});
  }
  std::size_t n = 0;
  for (auto& in : corpus::artin_schreier(p, seed, size)) {
    std::string id = id_of("asnf-" + std::to_string(p), n++);
    try {
      auto nf = asnf::as_normal_form(in.f, in.stream);
      std::vector<std::string> bad;
      if (!nf.identity_holds()) bad.push_back("identity residual " + nf.identity_residual().str("x"));
      auto s = nf.shape(p);
      for (const auto& q : s.problems) bad.push_back(q);
      if (!nf.absorption_verified()) bad.push_back("an absorbed term does not lift");
      for (const auto& t : nf.absorbed)
        if (t.checks.size() < asnf::kAbsorptionChecks) bad.push_back("absorbed term checked at fewer than 3 approximants");
      r.cases.push_back({id, bad.empty(), "f = " + in.f.str("x") + " -> g = " + nf.g_str() + (bad.empty() ? "" : ": " + join(bad))});
    } catch (const Error& e) {
      r.cases.push_back({id, false, "f = " + in.f.str("x") + ": " + e.what()});
    }
  }
  return r;
}

SuiteResult criterion(long p) {
  SuiteResult r{"criterion p=" + std::to_string(p), {}, 0, "lists of length <= 4 over {-3/2, ..., 3/2} plus zero"};
  std::size_t n = 0;
  for (int len = 1; len <= 4; ++len) {
    long total = 1;
    for (int i = 0; i < len; ++i) total *= 8;
    for (long code = 0; code < total; ++code) {
      std::vector<std::optional<Value>> vals;
      long c = code;
      for (int i = 0; i < len; ++i, c /= 8)
        vals.push_back(c % 8 == 7 ? std::nullopt : std::optional<Value>(Value::of(c % 8 - 3, 2)));
      // brute force: an index prime to p whose value is below every other nonzero value
      std::optional<long> expect;
      for (int i = 0; i < len; ++i) {
        if (!vals[i] || (i + 1) % p == 0) continue;
        bool least = true;
        for (int k = 0; k < len; ++k)
          if (k != i && vals[k] && !(*vals[i] < *vals[k])) least = false;
        if (least) expect = i + 1;
      }
      auto got = asnf::generator_criterion(vals, p);
      bool ok = got.holds == expect.has_value() && (!expect || got.i0 == expect);
      r.cases.push_back({id_of("criterion-" + std::to_string(p) + "-" + std::to_string(len), static_cast<std::size_t>(code)), ok,
                         ok ? "" : "disagrees with brute force"});
      ++n;
    }
  }
  return r;
}

SuiteResult kummer(std::uint64_t seed, std::size_t size) {
  SuiteResult r{"kummer", {}, 0, "Q_2(pi), pi^4 = 2; inputs needing a missing square root are skipped as inadmissible"};
  std::size_t budget = 6 * size + 12;
  auto inputs = corpus::kummer(seed, budget);
  std::size_t n = 0;
  for (auto& in : inputs) {
    if (r.cases.size() >= size) break;
    std::string id = id_of("kummer", n++);
    try {
      auto nf = kummer::kummer_normal_form_p2(in.f, in.stream);
      std::vector<std::string> bad;
      if (!nf.chain_verified()) bad.push_back("witness chain does not re-verify");
      if (!nf.membership_verified() || nf.membership.size() < kummer::kMembershipChecks)
        bad.push_back("membership check fails");
      for (const auto& q : nf.shape().problems) bad.push_back(q);
      r.cases.push_back({id, bad.empty(),
                         in.family + " case " + std::to_string(nf.kase) + ": f = " + in.f.str("x") + " -> g = " +
                             nf.g_str() + (bad.empty() ? "" : ": " + join(bad))});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SquareRootUnavailable) {
        ++r.skipped;
        continue;
      }
      r.cases.push_back({id, false, "f = " + in.f.str("x") + ": " + e.what()});
    }
  }
  return r;
}

SuiteResult simulator(long p, std::uint64_t seed, std::size_t size) {
  SuiteResult r{"simulator p=" + std::to_string(p), {}, 0, "v(p) = 1, 20 entries per system"};
  Rng rng(seed);
  long den = p * p;
  for (std::size_t n = 0; n < size; ++n) {
    kummer::ValueMonomialSystem sys{p, Value(Rational(1)), {}, {}};
    for (int k = 0; k < 20; ++k) sys.entries[rng.range(1, 4 * p * p)] = Value::of(rng.range(den + 1, 4 * den), den);
    std::string id = id_of("sim-" + std::to_string(p), n);
    try {
      auto rep = kummer::value_sim_terminates(sys);
      std::vector<std::string> bad;
      if (rep.result.merges.size() > rep.initial_count) bad.push_back("more merges than monomials");
      for (const auto& [i, cs] : rep.result.contributions) {
        if (i % p == 0) bad.push_back("target index divisible by p");
        for (const auto& c : cs) {
          Rational v = rep.result.system.entries.at(c.source).q();
          for (long k = 0; k < c.m; ++k) v = delta_def(p, Rational(1), v);
          if (c.value != Value(v)) bad.push_back("fold value of " + std::to_string(c.source) + " differs from delta^m");
        }
        for (std::size_t a = 0; a < cs.size(); ++a)
          for (std::size_t b = a + 1; b < cs.size(); ++b)
            if (cs[a].value == cs[b].value) bad.push_back("collision left at " + std::to_string(i));
      }
      r.cases.push_back({id, bad.empty(),
                         std::to_string(rep.initial_count) + " monomials, " + std::to_string(rep.result.merges.size()) +
                             " merges" + (bad.empty() ? "" : ": " + join(bad))});
    } catch (const Error& e) {
      // an illegal merge is detected and reported, never looped on
      bool guard = e.code() == ErrorCode::GuardViolation && std::string(e.what()).find("no legal merge") != std::string::npos;
      r.cases.push_back({id, guard, std::string("stopped: ") + e.what()});
    }
  }
  return r;
}

SuiteResult trace_agreement(std::uint64_t seed, std::size_t size) {
  SuiteResult r{"trace agreement", {}, 0, "second-case runs of the exact engine against value_sim_fold"};
  std::size_t n = 0;
  auto judge = [&](const std::string& label, const kummer::KummerNormalForm& nf) {
    std::string d = kummer::trace_disagreement(nf);
    r.cases.push_back({id_of("trace", n++), d.empty(),
                       label + ": " + std::to_string(nf.trace.merges.size()) + " merges" + (d.empty() ? "" : ", " + d)});
  };
  for (auto& in : corpus::kummer(seed, 6 * size + 12)) {
    if (r.cases.size() >= size) break;
    try {
      auto nf = kummer::kummer_normal_form_p2(in.f, in.stream);
      if (nf.kase == 2) judge("f = " + in.f.str("x"), nf);
    } catch (const Error&) {
      // only completed runs are compared
    }
  }
  // a collision v = 7/4 at index 1 against delta(3/2) from index 2
  auto m = corpus::two_adic_ramified();
  auto P = [&](std::vector<long> c) {
    std::vector<Rational> q;
    for (long x : c) q.emplace_back(x);
    return Element::padic(m, q, Value::infinity(1));
  };
  Poly h(m, {Element::zero(m), P({0, 4, 0, 10}), P({4, 0, 14})});
  auto at = ApproximationType::from_ambient(
      m, Element::padic(m, {Rational(1027), Rational(227), Rational(906), Rational(1132)}, Value::of(12)));
  auto nf = kummer::kummer_second_case_p2(h, at);
  judge("merge instance h = " + h.str("x"), nf);
  if (nf.trace.merges.empty()) r.cases.back() = {r.cases.back().id, false, "merge instance made no merge"};
  return r;
}

SuiteResult ext() {
  SuiteResult r{"ext", {}, 0, ""};
  std::size_t n = 0;
  auto pow_of = [](long d, long p) {
    while (p > 1 && d % p == 0) d /= p;
    return d == 1;
  };
  for (const auto& c : ext::extension_catalog()) {
    std::string id = id_of("ext-catalog", n++);
    try {
      auto inv = ext::extension_invariants(c.spec);
      std::vector<std::string> bad;
      if (inv.degree != inv.e * inv.f * inv.defect) bad.push_back("degree != e f defect");
      if (!pow_of(inv.defect, inv.p)) bad.push_back("defect not a power of p");
      if (inv.e != c.e || inv.f != c.f || inv.defect != c.defect) bad.push_back("(e, f, defect) differ from the table");
      if (inv.te1 != c.te1 || inv.te2 != c.te2 || inv.te3 != c.te3) bad.push_back("TE verdicts differ from the table");
      if (ext::tame_check(inv, inv.p) != (c.te1 && c.te2 && c.te3)) bad.push_back("tame verdict differs");
      std::ostringstream os;
      os << c.name << ": e = " << inv.e << ", f = " << inv.f << ", defect = " << inv.defect
         << (inv.tame() ? ", tame" : ", not tame");
      r.cases.push_back({id, bad.empty(), os.str() + (bad.empty() ? "" : ": " + join(bad))});
    } catch (const Error& e) {
      r.cases.push_back({id, false, c.name + ": " + e.what()});
    }
  }
  n = 0;
  for (long p : {2L, 3L})
    for (const auto& t : ext::tower_checks(p))
      r.cases.push_back({id_of("ext-tower", n++), t.multiplicative(), t.name});
  n = 0;
  for (const auto& c : ext::composite_catalog()) {
    auto d = ext::composite_immediate_check(c.L, c.steps);
    auto l = ext::layerwise_immediate_check(c.L, c.steps);
    r.cases.push_back({id_of("ext-composite", n++), d.immediate == l.immediate,
                       c.name + ": " + (d.immediate ? "immediate" : d.reason + " / " + l.reason)});
  }
  return r;
}

std::vector<SuiteResult> run(const std::string& name, std::uint64_t seed, std::size_t size) {
  std::vector<SuiteResult> out;
  bool all = name == "all";
  bool known = all;
  if (all || name == "delta") {
    known = true;
    for (long p : {2L, 3L, 5L}) out.push_back(delta(p, seed + static_cast<std::uint64_t>(p), size));
  }
  if (all || name == "oneunit") {
    known = true;
    out.push_back(oneunit('a', seed, size));
    out.push_back(oneunit('c', seed + 1, size));
  }
  if (all || name == "asnf") {
    known = true;
    for (long p : {2L, 3L}) out.push_back(asnf(p, seed + static_cast<std::uint64_t>(p), size));
    for (long p : {2L, 3L}) out.push_back(criterion(p));
  }
  if (all || name == "kummer") {
    known = true;
    out.push_back(kummer(seed, size));
    for (long p : {2L, 3L, 5L}) out.push_back(simulator(p, seed + static_cast<std::uint64_t>(p), size));
    out.push_back(trace_agreement(seed, size));
  }
  if (all || name == "ext") {
    known = true;
    out.push_back(ext());
  }
  if (!known) fail(ErrorCode::UnknownSuite, "unknown suite '" + name + "' (delta, oneunit, asnf, kummer, ext, all)");
  return out;
}

}  // namespace ramlab::suites
