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
#include <set>

#include "ramlab/asnf.hpp"
#include "ramlab/cli.hpp"
#include "ramlab/error.hpp"
#include "ramlab/extcheck.hpp"
#include "ramlab/kummer.hpp"
#include "ramlab/ops.hpp"
#include "ramlab/suites.hpp"

namespace ramlab::cli {

using nlohmann::json;

namespace {

json witness_json(const Witness& w) {
  return {{"kind", std::string(to_string(w.kind))},
          {"claim", w.claim},
          {"lhs", w.lhs.str()},
          {"rhs", w.rhs.str()},
          {"root", w.root.str()},
          {"checked_precision", w.checked_precision().str()},
          {"verified", w.verify()}};
}

// collects re-checks; the verdict is recomputed here, never copied
struct Checks {
  json list = json::array();
  bool all = true;

  void add(const std::string& claim, bool ok, json witness = nullptr) {
    json c = {{"claim", claim}, {"verified", ok}};
    if (!witness.is_null()) c["witness"] = std::move(witness);
    list.push_back(std::move(c));
    all = all && ok;
  }
  void add(const Witness& w) { add(w.claim, w.verify(), witness_json(w)); }

  json section() const { return {{"checks", list}, {"all_pass", all}}; }
};

json elements(const std::vector<Element>& a) {
  json r = json::array();
  for (const auto& x : a) r.push_back(x.str());
  return r;
}

json stabilizations(const std::vector<StabilizationCertificate>& s) {
  json r = json::array();
  for (const auto& c : s)
    r.push_back({{"h", c.h},
                 {"alpha0", c.alpha0.str()},
                 {"stable_value", c.stable_value.str()},
                 {"first_index", c.first_index},
                 {"checked_through", c.checked_through}});
  return r;
}

json opt_long(const std::optional<long>& x) { return x ? json(*x) : json(nullptr); }

json merges_json(const std::vector<kummer::MergeEvent>& ms) {
  json r = json::array();
  for (const auto& m : ms)
    r.push_back({{"target", m.target},
                 {"low", m.low},
                 {"high", m.high},
                 {"common", m.common.str()},
                 {"merged", m.merged ? json(m.merged->str()) : json(nullptr)}});
  return r;
}

json contributions_json(const std::map<long, std::vector<kummer::Contribution>>& cs) {
  json r = json::array();
  for (const auto& [i, list] : cs) {
    json l = json::array();
    for (const auto& c : list) l.push_back({{"source", c.source}, {"m", c.m}, {"value", c.value.str()}});
    r.push_back({{"index", i}, {"contributions", l}});
  }
  return r;
}

json system_json(const kummer::ValueMonomialSystem& s) {
  json r = json::array();
  for (const auto& [i, v] : s.entries) r.push_back({{"index", i}, {"value", v.str()}});
  return r;
}

ApproximationType make_stream(const Job& job, const std::optional<Value>& prec) {
  const auto& st = *job.stream;
  ApproximationType at = st.kind == "xi"        ? xi_stream(job.model->p(), st.terms)
                         : st.kind == "ambient" ? ApproximationType::from_ambient(job.model, *st.ambient)
                                                : ApproximationType(job.model, st.approximants);
  if (prec && at.ambient() && *prec < at.ambient()->precision())
    at = ApproximationType::from_ambient(job.model, at.ambient()->truncated(*prec));
  return at;
}

// the normal form is only meaningful on a genuine approximation type
void stream_check(const ApproximationType& at, Checks& checks) {
  std::string why;
  try {
    at.check();
  } catch (const Error& e) {
    why = e.what();
  }
  checks.add("stream: " + std::to_string(at.size()) + " approximants form a pseudo-Cauchy sequence" +
                 (why.empty() ? std::string() : ": " + why),
             why.empty());
}

json nf_as(const Job& job, const Overrides& ov, Checks& checks, json& work) {
  auto at = make_stream(job, ov.prec ? ov.prec : job.prec);
  std::size_t S = ov.confirmations.value_or(job.confirmations);
  auto nf = asnf::as_normal_form(*job.poly, at, S);
  long p = job.model->p();
  auto shape = nf.shape(p);
  auto crit = asnf::generator_criterion(nf, p);
  json absorbed = json::array();
  for (const auto& t : nf.absorbed) {
    json cs = json::array();
    for (const auto& c : t.checks) cs.push_back({{"approximant", c.approximant}, {"witness", witness_json(c.witness)}});
    absorbed.push_back({{"index", t.index}, {"coeff", t.coeff.str()}, {"term", t.term.str("x")}, {"checks", cs}});
  }
  json constraints = json::array();
  for (const auto& c : nf.constraints) constraints.push_back(c.str());

  auto residual = nf.identity_residual();
  checks.add("f - g(z) - wp(W) - absorbed = 0 as a polynomial identity", residual.is_zero());
  checks.add("shape: leading coefficient of z is a unit", shape.unit_z);
  checks.add("shape: a_i has negative value for i >= 1", shape.negative_values);
  checks.add("shape: no surviving index divisible by p", shape.p_free_indices);
  checks.add("shape: values of the a_i are distinct", shape.distinct_values);
  for (const auto& t : nf.absorbed)
    for (const auto& c : t.checks) checks.add(c.witness);

  stream_check(at, checks);
  work["approximants_consumed"] = at.size();
  work["stabilization_runs"] = nf.stabilizations.size();
  return {{"c", nf.c.str()},
          {"d", nf.d.str()},
          {"gamma", nf.gamma.str()},
          {"center_index", nf.center_index},
          {"g", nf.g_str()},
          {"a", elements(nf.a)},
          {"i0", opt_long(nf.i0)},
          {"W", nf.witness.str("x")},
          {"absorbed", absorbed},
          {"constraints", constraints},
          {"stabilizations", stabilizations(nf.stabilizations)},
          {"shape_problems", shape.problems},
          {"criterion", {{"holds", crit.holds}, {"i0", opt_long(crit.i0)}, {"reason", crit.reason}}}};
}

json nf_kummer(const Job& job, const Overrides& ov, Checks& checks, json& work) {
  auto at = make_stream(job, ov.prec ? ov.prec : job.prec);
  std::size_t S = ov.confirmations.value_or(job.confirmations);
  auto nf = kummer::kummer_normal_form_p2(*job.poly, at, S);
  json chain = json::array();
  for (const auto& e : nf.chain) {
    chain.push_back({{"step", e.step}, {"detail", e.detail}, {"witness", witness_json(e.witness)}});
    checks.add(e.witness);
  }
  json membership = json::array();
  for (const auto& m : nf.membership) {
    membership.push_back({{"approximant", m.approximant}, {"witness", witness_json(m.witness)}});
    checks.add(m.witness);
  }
  auto shape = nf.shape();
  if (nf.kase != 0) {
    checks.add("shape: leading coefficient of z is a unit", shape.unit_z);
    checks.add("shape: a_i lies in the maximal ideal for i >= 1", shape.maximal_ideal);
    checks.add("shape: no monomial above v(4) survives", shape.deleted_above_bound);
  }
  if (nf.kase == 2) {
    std::string d = kummer::trace_disagreement(nf);
    checks.add("value trace agrees with the simulator" + (d.empty() ? std::string() : ": " + d), d.empty());
  }
  stream_check(at, checks);
  work["approximants_consumed"] = at.size();
  work["stabilization_runs"] = nf.stabilizations.size();
  work["chain_entries"] = nf.chain.size();
  return {{"case", nf.kase},
          {"c", nf.c.str()},
          {"d", nf.d.str()},
          {"gamma", nf.gamma.str()},
          {"center_index", nf.center_index},
          {"g", nf.g_str()},
          {"a", elements(nf.a)},
          {"i0", opt_long(nf.i0)},
          {"unique_least", shape.unique_least},
          {"chain", chain},
          {"eval_index", nf.eval_index},
          {"membership", membership},
          {"strengthenings", nf.strengthenings},
          {"stabilizations", stabilizations(nf.stabilizations)},
          {"trace",
           {{"initial", system_json(nf.trace.initial)},
            {"merges", merges_json(nf.trace.merges)},
            {"contributions", contributions_json(nf.trace.contributions)}}},
          {"shape_problems", shape.problems}};
}

json nf_kummer_sim(const Job& job, Checks& checks, json& work) {
  kummer::ValueMonomialSystem sys{job.sim_p, job.sim_vp, job.sim_entries, {}};
  auto rep = kummer::value_sim_terminates(sys);
  ordval::DeltaContext ctx(job.sim_p, job.sim_vp);
  checks.add("terminates within the initial monomial count of merges", rep.result.merges.size() <= rep.initial_count);
  checks.add("monomial count never increases", rep.monotone);
  bool fold = true, distinct = true;
  for (const auto& [i, cs] : rep.result.contributions) {
    for (const auto& c : cs)
      fold = fold && c.value == ctx.delta_iter(c.m, rep.result.system.entries.at(c.source));
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = a + 1; b < cs.size(); ++b) distinct = distinct && cs[a].value != cs[b].value;
  }
  checks.add("folded values equal delta^m of the source value", fold);
  checks.add("contributions at each index are distinct", distinct);
  json mins = json::array();
  for (const auto& [i, v] : rep.result.min_value) mins.push_back({{"index", i}, {"value", v.str()}});
  work["merges"] = rep.result.merges.size();
  work["initial_monomials"] = rep.initial_count;
  return {{"final", system_json(rep.result.system)},
          {"merges", merges_json(rep.result.merges)},
          {"counts", rep.counts},
          {"contributions", contributions_json(rep.result.contributions)},
          {"min_value", mins}};
}

json ext_invariants(const Job& job, Checks& checks) {
  ext::ExtensionSpec spec{job.model, *job.poly, std::nullopt};
  if (job.declared_e || job.declared_f)
    spec.declared = ext::DeclaredData{job.declared_e.value_or(1), job.declared_f.value_or(1), job.residue_separable};
  auto inv = ext::extension_invariants(spec);
  bool pow_p = true;
  for (long d = inv.defect; d > 1; d /= inv.p)
    if (inv.p < 2 || d % inv.p != 0) {
      pow_p = false;
      break;
    }
  checks.add("degree = e * f * defect", inv.degree == inv.e * inv.f * inv.defect);
  checks.add("defect is a power of the residue characteristic", pow_p);
  checks.add("tame verdict matches TE1, TE2, TE3", ext::tame_check(inv, inv.p) == inv.tame());
  return {{"degree", inv.degree},
          {"e", inv.e},
          {"f", inv.f},
          {"defect", inv.defect},
          {"p", inv.p},
          {"te1", inv.te1},
          {"te2", inv.te2},
          {"te3", inv.te3},
          {"tame", inv.tame()},
          {"rule", inv.rule}};
}

json hensel(const Job& job, const Overrides& ov, Checks& checks) {
  const auto& m = job.model;
  auto eta = m->residue_field()->from_integer(job.eta);
  auto verdict = ext::henselian_element_test(*job.poly, eta);
  json r = {{"holds", verdict.holds}, {"reason", verdict.reason}};
  if (!verdict.holds) return r;
  Value target = ov.prec ? *ov.prec
                 : job.prec ? *job.prec
                 : m->value_rank() == 1 ? Value::of(12)
                                        : Value(Rational(12), Rational(0));
  Element root = hensel_lift(*job.poly, eta, target);
  Element residual = job.poly->eval(root);
  bool ok = residual.is_zero() && residual.precision() >= target;
  checks.add("h(root) = 0 at precision " + target.str(), ok,
             json{{"root", root.str()}, {"h(root)", residual.str()}, {"checked_precision", residual.precision().str()}});
  r["root"] = root.str();
  r["target"] = target.str();
  return r;
}

json suites_json(const std::vector<suites::SuiteResult>& rs, Checks& checks, json& work) {
  json out = json::array();
  std::size_t total = 0;
  for (const auto& r : rs) {
    json failures = json::array();
    for (const auto& c : r.cases)
      if (!c.pass) failures.push_back({{"id", c.id}, {"detail", c.detail}});
    out.push_back({{"name", r.name},
                   {"note", r.note},
                   {"passed", r.passed()},
                   {"total", r.cases.size()},
                   {"skipped", r.skipped},
                   {"failures", failures}});
    checks.add(r.name + ": " + std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases pass",
               r.all_pass());
    total += r.cases.size();
  }
  work["cases"] = total;
  return out;
}

json tool() { return {{"name", "ramlab"}, {"version", kToolVersion}}; }

json echo(const Job& job) {
  json e = json::object();
  for (const auto& [name, settings] : job.blocks) {
    json lines = json::array();
    for (const auto& s : settings) lines.push_back(s.key + " = " + s.value);
    e[name] = lines;
  }
  return e;
}

Outcome finish(json report, const Checks& checks) {
  report["verification"] = checks.section();
  return {std::move(report), checks.all ? kExitOk : kExitVerification};
}

}  // namespace

Outcome run_job(const Job& job, const Overrides& ov) {
  json report = {{"tool", tool()}, {"task", {{"kind", job.task}, {"job", echo(job)}}}};
  json overrides = json::object();
  if (ov.prec) overrides["prec"] = ov.prec->str();
  if (ov.confirmations) overrides["confirmations"] = *ov.confirmations;
  report["task"]["overrides"] = overrides;
  if (job.model) report["task"]["model"] = job.model->str();
  Checks checks;
  json work = json::object();
  try {
    json result;
    if (job.task == "nf-as") result = nf_as(job, ov, checks, work);
    else if (job.task == "nf-kummer") result = nf_kummer(job, ov, checks, work);
    else if (job.task == "nf-kummer-sim") result = nf_kummer_sim(job, checks, work);
    else if (job.task == "ext-invariants") result = ext_invariants(job, checks);
    else if (job.task == "hensel") result = hensel(job, ov, checks);
    else if (job.task == "verify") result = suites_json(suites::run(job.suite, job.seed, job.size), checks, work);
    else fail(ErrorCode::Parse, "unknown task " + job.task);
    report["result"] = std::move(result);
    report["work"] = std::move(work);
    return finish(std::move(report), checks);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::UnknownSuite) throw;
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    report["verification"] = {{"checks", json::array()}, {"all_pass", false}};
    return {std::move(report), kExitComputation};
  }
}

Outcome run_verify(const std::string& suite, std::uint64_t seed, std::size_t size) {
  json report = {{"tool", tool()},
                 {"task", {{"kind", "verify"}, {"suite", suite}, {"seed", seed}, {"size", size}}}};
  Checks checks;
  json work = json::object();
  report["result"] = suites_json(suites::run(suite, seed, size), checks, work);
  report["work"] = std::move(work);
  return finish(std::move(report), checks);
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace ramlab::cli
