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
#include "doctest.h"

#include "ramlab/asnf.hpp"
#include "ramlab/rng.hpp"

using namespace ramlab;
using namespace ramlab::asnf;

namespace {

Element tpow(const ModelPtr& m, long num, long den = 1) { return Element::monomial(m, 1, Value::of(num, den)); }

Element random_series(const ModelPtr& m, Rng& rng) {
  Element::Terms terms;
  long p = m->p();
  int n = static_cast<int>(rng.range(0, 4));
  for (int i = 0; i < n; ++i) {
    auto c = static_cast<Element::Coeff>(rng.range(1, p - 1));
    terms[Value::of(rng.range(-6, 6), p * p)] = c;
  }
  return Element::series(m, terms, Value::infinity(1));
}

}  // namespace

TEST_CASE("wp examples") {
  auto m = FieldModel::perfect_hull(2);
  CHECK(wp(tpow(m, -1)).str() == "t^-2 + t^-1");
  CHECK(wp(Element::zero(m)).is_zero());
  CHECK(wp(Element::one(m)).is_zero());
  CHECK_THROWS_AS(wp(Element::one(FieldModel::padic(2))), Error);
}

TEST_CASE("hasse taylor") {
  auto m = FieldModel::perfect_hull(2);
  auto X = Poly::variable(m);
  auto t3 = hasse_taylor(X.pow(3));
  REQUIRE(t3.size() == 4);
  CHECK(t3[0].str("X0") == "X0^3");
  CHECK(t3[1].str("X0") == "X0^2");
  CHECK(t3[2].str("X0") == "X0");
  CHECK(t3[3].str("X0") == "1");
  auto t4 = hasse_taylor(X.pow(4));
  REQUIRE(t4.size() == 5);
  CHECK(t4[1].is_zero());
  CHECK(t4[2].is_zero());
  CHECK(t4[3].is_zero());
  auto t2 = hasse_taylor(X.pow(2) + X);
  CHECK(t2[0].str("X0") == "X0 + X0^2");
  CHECK(t2[1].str("X0") == "1");
  CHECK(t2[2].str("X0") == "1");
}

TEST_CASE("taylor expansion reproduces f at random centres") {
  Rng rng(11);
  for (long p : {2L, 3L}) {
    auto m = FieldModel::perfect_hull(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Element> cs;
      for (int i = 0; i < 5; ++i) cs.push_back(random_series(m, rng));
      Poly f(m, cs);
      Element x0 = random_series(m, rng), y = random_series(m, rng);
      auto tay = hasse_taylor(f);
      Element acc = Element::zero(m), yk = Element::one(m);
      for (const auto& fi : tay) {
        acc += fi.eval(x0) * yk;
        yk *= y;
      }
      CHECK(acc.equal_at_precision(f.eval(x0 + y)));
    }
  }
}

TEST_CASE("fold examples") {
  auto m = FieldModel::perfect_hull(2);
  auto X = Poly::variable(m);
  auto f3 = fold_p_indices(hasse_taylor(X.pow(3)));
  REQUIRE(f3.b.count(1));
  CHECK(f3.b.at(1).str() == "X0^(1/2) + X0^2");
  CHECK(f3.b.at(3).str() == "1");
  auto f4 = fold_p_indices(hasse_taylor(X.pow(4)));
  REQUIRE(f4.b.size() == 1);
  // the index-4 coefficient is the constant 1, so two folds leave 1
  CHECK(f4.b.at(1).str() == "1");
  CHECK(f4.witness.at(1).str() == "1");
  auto lin = fold_p_indices(hasse_taylor(X + Poly::constant(tpow(m, 1))));
  CHECK(lin.witness.empty());
  CHECK(lin.b.at(1).str() == "1");
}

TEST_CASE("fold witness identity at random points") {
  Rng rng(5);
  for (long p : {2L, 3L}) {
    auto m = FieldModel::perfect_hull(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Element> cs;
      for (int i = 0; i < 7; ++i) cs.push_back(random_series(m, rng));
      Poly f(m, cs);
      auto fold = fold_p_indices(hasse_taylor(f));
      Element x0 = random_series(m, rng), y = random_series(m, rng);
      // f(x0 + y) = C(x0) + sum b_j(x0) y^j + wp(W)
      Element rhs = fold.constant.eval(x0);
      for (const auto& [j, b] : fold.b) rhs += b.eval(x0) * y.pow(static_cast<unsigned long>(j));
      Element w = fold.witness_constant.eval(x0);
      for (const auto& [k, wk] : fold.witness) w += wk.eval(x0) * y.pow(static_cast<unsigned long>(k));
      rhs += wp(w);
      CHECK(rhs.equal_at_precision(f.eval(x0 + y)));
      for (const auto& [j, b] : fold.b) CHECK(j % p != 0);
    }
  }
}

TEST_CASE("wp additivity and frobenius fold") {
  Rng rng(3);
  for (long p : {2L, 3L}) {
    auto m = FieldModel::perfect_hull(p);
    for (int i = 0; i < 100; ++i) {
      auto b = random_series(m, rng), c = random_series(m, rng);
      CHECK((wp(b + c) - wp(b) - wp(c)).is_zero());
      CHECK((b.pow(static_cast<unsigned long>(p)) - wp(b) - b).is_zero());
    }
  }
}

TEST_CASE("normal form of t^-3 x^2") {
  auto at = xi_stream(2);
  const auto& m = at.model();
  auto x = Poly::variable(m);
  auto f = x.pow(2).scaled(tpow(m, -3));
  auto nf = as_normal_form(f, at);
  CHECK(nf.c.str() == "1");
  CHECK(nf.d.str() == "t^1/2");
  CHECK(nf.gamma == Value::of(1, 2));
  CHECK(nf.g_str() == "t^-3/2 + t^-1*z");
  CHECK(nf.witness.str("x") == "t^-3/2*x");
  CHECK(nf.absorbed.empty());
  CHECK(nf.identity_holds());
  CHECK(nf.shape(2).ok());
  REQUIRE(nf.i0);
  CHECK(*nf.i0 == 1);
  auto crit = generator_criterion(nf, 2);
  CHECK(crit.holds);
  CHECK(*crit.i0 == 1);
  auto red = reduce_degree_p_extension(f, at);
  CHECK_FALSE(red.degenerate);
  CHECK(red.criterion.holds);
  CHECK(red.nf.g_str() == "t^-3/2 + t^-1*z");
}

TEST_CASE("normal form of x^2 + t absorbs the linear term") {
  auto at = xi_stream(2);
  const auto& m = at.model();
  auto x = Poly::variable(m);
  auto f = x.pow(2) + Poly::constant(tpow(m, 1));
  auto nf = as_normal_form(f, at);
  CHECK(nf.g_str() == "1 + t");
  CHECK(nf.witness.str("x") == "x");
  REQUIRE(nf.absorbed.size() == 1);
  CHECK(nf.absorbed[0].index == 1);
  CHECK(nf.absorbed[0].coeff.str() == "t^1/2");
  CHECK(nf.absorbed[0].checks.size() == kAbsorptionChecks);
  CHECK(nf.absorption_verified());
  CHECK(nf.identity_holds());
  auto red = reduce_degree_p_extension(f, at);
  CHECK(red.degenerate);
}

TEST_CASE("trivial and wp inputs") {
  auto at = xi_stream(2);
  const auto& m = at.model();
  auto x = Poly::variable(m);
  auto nf0 = as_normal_form(Poly(m), at);
  CHECK(nf0.a.empty());
  CHECK(nf0.witness.is_zero());
  auto red = reduce_degree_p_extension(wp(x), at);
  CHECK(red.degenerate);
  CHECK(red.nf.a.empty());
  CHECK(red.nf.identity_holds());
}

TEST_CASE("random normal forms satisfy identity and shape") {
  Rng rng(17);
  for (long p : {2L, 3L}) {
    int done = 0;
    for (int trial = 0; trial < 30; ++trial) {
      auto at = xi_stream(p, 24);
      const auto& m = at.model();
      std::vector<Element> cs;
      for (int i = 0; i < 4; ++i) cs.push_back(random_series(m, rng));
      Poly f(m, cs);
      try {
        auto nf = as_normal_form(f, at);
        CHECK(nf.identity_holds());
        auto s = nf.shape(p);
        CHECK_MESSAGE(s.ok(), f.str("x"));
        CHECK(nf.absorption_verified());
        ++done;
      } catch (const Error& e) {
        // a stream of finite length may run out before a centre qualifies
        CHECK(e.code() == ErrorCode::ApproximantsExhausted);
      }
    }
    CHECK(done > 20);
  }
}

TEST_CASE("criterion examples") {
  auto v = [](long n, long d) { return std::optional<Value>(Value::of(n, d)); };
  auto r1 = generator_criterion({std::nullopt, v(-1, 1)}, 2);
  CHECK_FALSE(r1.holds);
  CHECK(r1.reason.find("prime to p") != std::string::npos);
  auto r2 = generator_criterion({v(-1, 1), std::nullopt, v(-1, 1)}, 2);
  CHECK_FALSE(r2.holds);
  CHECK(r2.reason.find("not unique") != std::string::npos);
  auto r3 = generator_criterion({v(-1, 1)}, 2);
  CHECK(r3.holds);
  CHECK(*r3.i0 == 1);
}

TEST_CASE("criterion agrees with exhaustive comparison") {
  for (long p : {2L, 3L}) {
    // every list of length <= 4 over {-3..3}/2 plus zero
    for (int len = 1; len <= 4; ++len) {
      long total = 1;
      for (int i = 0; i < len; ++i) total *= 8;
      for (long code = 0; code < total; ++code) {
        std::vector<std::optional<Value>> vals;
        long c = code;
        for (int i = 0; i < len; ++i, c /= 8)
          vals.push_back(c % 8 == 7 ? std::nullopt : std::optional<Value>(Value::of(c % 8 - 3, 2)));
        bool expect = false;
        long expect_i = 0;
        for (int i = 0; i < len; ++i) {
          if (!vals[i] || (i + 1) % p == 0) continue;
          bool strictly_least = true;
          for (int k = 0; k < len; ++k)
            if (k != i && vals[k] && !(*vals[i] < *vals[k])) strictly_least = false;
          if (strictly_least) {
            expect = true;
            expect_i = i + 1;
          }
        }
        auto r = generator_criterion(vals, p);
        REQUIRE(r.holds == expect);
        if (expect) CHECK(*r.i0 == expect_i);
      }
    }
  }
}
