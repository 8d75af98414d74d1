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

#include "ramlab/corpus.hpp"
#include "ramlab/kummer.hpp"
#include "ramlab/rng.hpp"

using namespace ramlab;
using namespace ramlab::kummer;

namespace {

Element q2(const ModelPtr& m, long n) { return Element::from_integer(m, n); }

ValueMonomialSystem random_system(long p, Rng& rng, int size) {
  ValueMonomialSystem sys{p, Value(Rational(1)), {}, {}};
  long den = p * p;
  for (int k = 0; k < size; ++k) {
    long i = rng.range(1, 4 * p * p);
    // values in (1, 4], on a grid where delta collisions actually happen
    sys.entries[i] = Value::of(rng.range(den + 1, 4 * den), den);
  }
  return sys;
}

}  // namespace

TEST_CASE("geo_inverse examples") {
  auto m = FieldModel::padic(2);
  Element one = Element::one(m);
  Poly u(m, {one, q2(m, 2)});
  Poly s = geo_inverse(u, Value::of(3));
  CHECK(s.str("y") == "1 + 6*y + 4*y^2");
  // s*u = 1 mod 8
  Poly err = s * u - Poly::constant(one);
  for (const auto& c : err.coeffs()) CHECK((c.is_zero() || c.value() >= Value::of(3)));
  CHECK(geo_inverse(Poly::constant(one), Value::of(3)).str("y") == "1");
  CHECK(geo_inverse(Poly::constant(q2(m, 5)), Value::of(2)).str("y") == "1");
  CHECK_THROWS_AS(geo_inverse(Poly::constant(q2(m, 2)), Value::of(2)), Error);
}

TEST_CASE("value simulator examples") {
  ValueMonomialSystem s1{2, Value(Rational(1)), {{4, Value::of(3)}}, {}};
  auto r1 = value_sim_fold(s1);
  CHECK(r1.merges.empty());
  REQUIRE(r1.min_value.count(1));
  CHECK(r1.min_value.at(1) == Value::of(9, 4));
  CHECK(r1.contributions.at(1).front().m == 2);

  ValueMonomialSystem s2{2, Value(Rational(1)), {{1, Value::of(3, 2)}}, {}};
  auto r2 = value_sim_fold(s2);
  CHECK(r2.system.entries == s2.entries);
  CHECK(r2.min_value.at(1) == Value::of(3, 2));

  ValueMonomialSystem s3{2, Value(Rational(1)), {{1, Value::of(3, 2)}, {2, Value::of(2)}}, {}};
  auto r3 = value_sim_fold(s3);
  CHECK(r3.merges.empty());
  CHECK(r3.contributions.at(1).size() == 2);
  CHECK(r3.min_value.at(1) == Value::of(3, 2));

  // delta(3/2) = 7/4 collides with the index-1 value
  ValueMonomialSystem s4{2, Value(Rational(1)), {{1, Value::of(7, 4)}, {2, Value::of(3, 2)}}, {}};
  auto r4 = value_sim_fold(s4);
  REQUIRE(r4.merges.size() == 1);
  CHECK(r4.merges[0].low == 1);
  CHECK(r4.merges[0].high == 2);
  CHECK(r4.merges[0].common == Value::of(7, 4));
  CHECK(r4.system.count() == 1);

  auto empty = value_sim_terminates(ValueMonomialSystem{3, Value(Rational(1)), {}, {}});
  CHECK(empty.result.system.count() == 0);
  CHECK_THROWS_AS(value_sim_fold(ValueMonomialSystem{2, Value(Rational(1)), {{1, Value::of(1)}}, {}}), Error);
}

TEST_CASE("random systems terminate and fold by delta_iter") {
  Rng rng(2024);
  int merged = 0;
  for (long p : {2L, 3L, 5L}) {
    ordval::DeltaContext ctx(p, Value(Rational(1)));
    for (int trial = 0; trial < 200; ++trial) {
      auto sys = random_system(p, rng, 20);
      TerminationReport rep;
      try {
        rep = value_sim_terminates(sys);
      } catch (const Error& e) {
        // an illegal merge is reported, never looped on
        CHECK(e.code() == ErrorCode::GuardViolation);
        continue;
      }
      CHECK(rep.result.merges.size() <= rep.initial_count);
      merged += static_cast<int>(rep.result.merges.size());
      for (const auto& [i, cs] : rep.result.contributions) {
        CHECK(i % p != 0);
        for (const auto& c : cs) CHECK(c.value == ctx.delta_iter(c.m, rep.result.system.entries.at(c.source)));
        for (std::size_t a = 0; a < cs.size(); ++a)
          for (std::size_t b = a + 1; b < cs.size(); ++b) CHECK(cs[a].value != cs[b].value);
      }
    }
  }
  CHECK(merged > 0);
}

TEST_CASE("f = 0 gives the empty normal form") {
  auto m = corpus::two_adic_ramified();
  auto at = ApproximationType::from_ambient(m, Element::padic(m, {Rational(3), Rational(1)}, Value::of(12)));
  auto nf = kummer_normal_form_p2(Poly(m), at);
  CHECK(nf.kase == 0);
  CHECK(nf.a.empty());
  CHECK(nf.chain.empty());
}

TEST_CASE("corpus instances in both cases") {
  int seen[3] = {0, 0, 0};
  for (auto& in : corpus::kummer(5, 40)) {
    try {
      auto nf = kummer_normal_form_p2(in.f, in.stream);
      ++seen[nf.kase];
      CHECK(nf.kase == (in.family == "small" ? 1 : 2));
      CHECK(nf.chain_verified());
      CHECK(nf.membership_verified());
      CHECK(nf.membership.size() == kMembershipChecks);
      auto s = nf.shape();
      CHECK_MESSAGE(s.ok(), in.f.str("x"));
      CHECK(trace_disagreement(nf).empty());
      REQUIRE(nf.i0);
      CHECK(*nf.i0 % 2 == 1);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SquareRootUnavailable);
    }
  }
  CHECK(seen[1] >= 5);
  CHECK(seen[2] >= 5);
}

TEST_CASE("non-square coefficients are rejected") {
  auto m = corpus::two_adic_ramified();
  Element pi = Element::uniformizer(m);
  auto at = ApproximationType::from_ambient(m, Element::padic(m, {Rational(3), Rational(1)}, Value::of(12)));
  // 3 is not a square in Q_2(2^(1/4))
  Poly f = Poly::constant(q2(m, 3) * pi * pi);
  CHECK_THROWS_WITH_AS(kummer_normal_form_p2(f, at), doctest::Contains("not a square"), Error);

  // over the plain 2-adics f = 2x has d_0 = 2 c_1 of odd value
  auto q = FieldModel::padic(2);
  auto at2 = ApproximationType::from_ambient(q, Element::padic(q, {Rational(1 + 4 + 16 + 64 + 1024)}, Value::of(12)));
  try {
    kummer_normal_form_p2(Poly(q, {Element::zero(q), q2(q, 2)}), at2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SquareRootUnavailable);
  }
}

TEST_CASE("merge path through the second case") {
  auto m = corpus::two_adic_ramified();
  auto P = [&](std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return Element::padic(m, r, Value::infinity(1));
  };
  // v = 7/4 at index 1 and 3/2 at index 2; delta(3/2) = 7/4
  Poly h(m, {Element::zero(m), P({0, 4, 0, 10}), P({4, 0, 14})});
  Element xi = Element::padic(m, {Rational(1027), Rational(227), Rational(906), Rational(1132)}, Value::of(12));
  auto at = ApproximationType::from_ambient(m, xi);
  auto nf = kummer_second_case_p2(h, at);
  REQUIRE(nf.trace.merges.size() == 1);
  CHECK(nf.trace.merges[0].low == 1);
  CHECK(nf.trace.merges[0].high == 2);
  CHECK(nf.trace.merges[0].common == Value::of(7, 4));
  CHECK(trace_disagreement(nf).empty());
  CHECK(nf.chain_verified());
  CHECK(nf.membership_verified());
  bool has_merge = false;
  for (const auto& e : nf.chain) has_merge = has_merge || e.step == "merge";
  CHECK(has_merge);
  // residue field F_2: the colliding leading terms cancel and the folded
  // monomial ends above 2, so only a constant survives
  CHECK(nf.g_str().find('z') == std::string::npos);
  CHECK_FALSE(nf.shape().unique_least);
}

TEST_CASE("engine refuses other models") {
  auto m = FieldModel::perfect_hull(2);
  auto at = xi_stream(2, 8);
  CHECK_THROWS_AS(kummer_normal_form_p2(Poly(m, {Element::zero(m), Element::one(m)}), at), Error);
}
