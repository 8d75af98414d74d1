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
#include <doctest.h>

#include "ramlab/cli.hpp"
#include "ramlab/error.hpp"

using namespace ramlab;
using namespace ramlab::cli;

namespace {

const char* kWorked = R"(# comment line
[model]
kind = perfect-hull
p = 2

[stream]
kind = xi

[task]
kind = nf-as
f = t^-3 * x^2
)";

std::string parse_message(const std::string& text) {
  try {
    parse_job(text, "j");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("element grammar") {
  auto m = FieldModel::perfect_hull(2);
  CHECK(parse_element(m, "1 + t^(1/2) + t^3 @prec 5").str() == "1 + t^1/2 + t^3 @prec 5");
  CHECK(parse_element(m, "t^-3/2").identical(parse_element(m, "t^(-3/2)")));
  CHECK(parse_element(m, "(1 + t)^2").identical(parse_element(m, "1 + t^2")));
  CHECK(parse_element(m, "3").identical(Element::one(m)));
  CHECK_THROWS_AS(parse_element(m, "t^1/3"), Error);  // 1/3 is not in Z[1/2]
  CHECK_THROWS_AS(parse_element(m, "x"), Error);
  CHECK_THROWS_AS(parse_element(m, "1 +"), Error);

  auto q2 = FieldModel::padic(2);
  auto e = parse_element(q2, "17 @prec 2^6");
  CHECK(e.precision() == Value::of(6));
  CHECK(e.identical(Element::from_integer(q2, 17).truncated(Value::of(6))));
  CHECK_THROWS_AS(parse_element(q2, "17 @prec 3^6"), Error);
  CHECK_THROWS_AS(parse_element(q2, "t"), Error);

  auto L = FieldModel::iterated(3, 1, {}, {});
  auto r2 = parse_element(L, "u^-1*t + t^2 @prec (3,0)");
  CHECK(r2.value() == Value(Rational(1), Rational(-1)));
  CHECK(r2.precision() == Value(Rational(3), Rational(0)));

  auto pi = FieldModel::padic(2, {-2, 0, 0, 0, 1});
  CHECK(parse_element(pi, "pi^4").identical(Element::from_integer(pi, 2)));
}

TEST_CASE("polynomials") {
  auto m = FieldModel::perfect_hull(3);
  Poly f = parse_poly(m, "t^-1*x^3 - x + 2");
  CHECK(f.degree() == 3);
  CHECK(f.coeff(1).identical(Element::from_integer(m, -1)));
  CHECK(parse_poly(m, "(x + 1)^3").identical(parse_poly(m, "x^3 + 1")));
}

TEST_CASE("job files parse and run") {
  auto job = parse_job(kWorked);
  CHECK(job.task == "nf-as");
  CHECK(job.stream->kind == "xi");
  auto out = run_job(job);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["result"]["g"] == "t^-3/2 + t^-1*z");
  CHECK(out.report["result"]["c"] == "1");
  CHECK(out.report["result"]["d"] == "t^1/2");
  CHECK(out.report["verification"]["all_pass"] == true);
  CHECK(!out.report["verification"]["checks"].empty());
  // byte determinism within one process
  CHECK(render(run_job(parse_job(kWorked)).report) == render(out.report));

  Overrides ov;
  ov.confirmations = 5;
  auto again = run_job(job, ov);
  CHECK(again.report["task"]["overrides"]["confirmations"] == 5);
  CHECK(again.report["result"]["g"] == "t^-3/2 + t^-1*z");
}

TEST_CASE("malformed jobs carry positions") {
  std::string bad = kWorked;
  bad.replace(bad.find("t^-3 * x^2"), 10, "t^-3 * * x");
  CHECK(parse_message(bad) == "j:11:12: f: unexpected '*'");
  CHECK(parse_message("[task]\nkind = nf-as\nf = x\n").find("j:2:8: task nf-as needs a [model]") == 0);
  CHECK(parse_message("[model]\nkind = padic\np = 2\nk = 2\n[task]\nkind = hensel\nh = x\n").find("j:4:1:") == 0);
  CHECK(parse_message("[task]\nkind = verify\nsuite = zeta\n").find("j:3:9: unknown suite") == 0);
  CHECK(parse_message("[task]\nkind = verify\n").find("needs 'suite'") != std::string::npos);
  CHECK(parse_message("kind = verify\n").find("j:1:1: setting outside a block") == 0);
  CHECK(parse_message("[model]\nkind = padic\np = 2\n[model]\n").find("j:4:1: block [model] appears twice") == 0);
  CHECK(parse_message("[model]\nkind = padic\np = 2\n[task]\nkind = hensel\nh = x\neta = 1\nprec = 2^-1\n")
            .find("precision must be positive") != std::string::npos);
  CHECK(parse_message("[task]\nkind = nf-kummer-sim\nentries = 1: 3/2, 1: 2\n").find("listed twice") != std::string::npos);
  CHECK(parse_message("[model]\nkind = padic\np = 2\n[stream]\nkind = xi\n[task]\nkind = nf-as\nf = x\n").find("perfect hull") != std::string::npos);
}

TEST_CASE("verify dispatch") {
  auto d = run_verify("delta", 1, 100);
  CHECK(d.exit_code == kExitOk);
  CHECK(d.report["result"].size() == 3);
  for (const auto& s : d.report["result"]) {
    CHECK(s["passed"] == 100);
    CHECK(s["total"] == 100);
  }
  auto o = run_verify("oneunit", 7, 200);
  CHECK(o.exit_code == kExitOk);
  for (const auto& s : o.report["result"]) CHECK(s["passed"] == 200);
  CHECK_THROWS_AS(run_verify("unknown", 1, 10), Error);
}

TEST_CASE("computation errors and failed checks map to exit codes") {
  auto nonsq = parse_job(
      "[model]\nkind = padic\np = 2\neisenstein = -2, 0, 0, 0, 1\n[stream]\nkind = ambient\n"
      "ambient = 733 + 987*pi @prec 2^12\n[task]\nkind = nf-kummer\nf = 3*pi^2\n");
  auto out = run_job(nonsq);
  CHECK(out.exit_code == kExitComputation);
  CHECK(out.report["error"]["code"] == "square-root-unavailable");
  CHECK(out.report["verification"]["all_pass"] == false);

  auto skew = parse_job(
      "[model]\nkind = perfect-hull\np = 2\n[stream]\nkind = explicit\napproximant = 1 ; 1/2\n"
      "approximant = 1 + t^1/2 ; 3/4\napproximant = 1 + t^1/4 ; 7/8\napproximant = 1 + t^1/4 + t^7/8 ; 15/16\n"
      "[task]\nkind = nf-as\nf = t^-3*x^2\n");
  auto bad = run_job(skew);
  CHECK(bad.exit_code == kExitVerification);
  CHECK(bad.report["verification"]["all_pass"] == false);

  auto sim = parse_job("[task]\nkind = nf-kummer-sim\np = 2\nvp = 1\nentries = 1: 7/4, 2: 3/2\n");
  auto s = run_job(sim);
  CHECK(s.exit_code == kExitOk);
  REQUIRE(s.report["result"]["merges"].size() == 1);
  CHECK(s.report["result"]["merges"][0]["common"] == "7/4");
}
