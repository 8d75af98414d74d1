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

#include "ramlab/approx.hpp"

using namespace ramlab;

TEST_CASE("xi stream truncations") {
  auto at = xi_stream(2);
  at.extend(3);
  REQUIRE(at.size() == 3);
  CHECK(at.at(0).c.str() == "1");
  CHECK(at.at(0).gamma == Value::of(1, 2));
  CHECK(at.at(1).c.str() == "1 + t^1/2");
  CHECK(at.at(1).gamma == Value::of(3, 4));
  CHECK(at.at(2).c.str() == "1 + t^1/2 + t^3/4");
  CHECK(at.at(2).gamma == Value::of(7, 8));
  at.extend(0);
  CHECK(at.size() == 3);
  at.extend(5);
  CHECK_NOTHROW(at.check());
}

TEST_CASE("short ambient is exhausted") {
  auto at = xi_stream(2, 3);
  try {
    at.extend(100);
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ApproximantsExhausted);
  }
  CHECK(at.size() == 2);
}

TEST_CASE("stabilization") {
  auto at = xi_stream(2);
  const auto& m = at.model();
  auto X = Poly::variable(m);
  auto s1 = stabilize(at, X);
  CHECK(s1.stable_value == Value::of(0));
  CHECK(s1.first_index == 0);
  at.require(2);
  auto c2 = at.at(1).c;
  auto s2 = stabilize(at, X - Poly::constant(c2));
  CHECK(s2.stable_value == Value::of(3, 4));
  CHECK(s2.first_index == 2);
  CHECK(s2.alpha0 == Value::of(7, 8));
  auto a = Element::monomial(m, 1, Value::of(-5, 2));
  auto s3 = stabilize(at, Poly::constant(a));
  CHECK(s3.stable_value == Value::of(-5, 2));
  CHECK(s3.first_index == 0);
  // extending never changes an issued certificate
  at.extend(4);
  CHECK(stabilize(at, X - Poly::constant(c2)).stable_value == s2.stable_value);
}

TEST_CASE("explicit stream cannot stabilize beyond its length") {
  auto m = FieldModel::perfect_hull(2);
  auto one = Element::one(m);
  ApproximationType at(m, {{one, Value::of(1, 2)}});
  CHECK_THROWS_AS(stabilize(at, Poly::variable(m)), Error);
}

TEST_CASE("centre choice") {
  auto at = xi_stream(2);
  std::vector<LinearConstraint> cs{{Rational(1), Value::of(-3, 2), Relation::NotEqual, "b1"}};
  auto ch = choose_center(at, cs);
  CHECK(ch.index == 0);
  CHECK(ch.gamma == Value::of(1, 2));
  CHECK(choose_center(at, {}).index == 0);
  std::vector<LinearConstraint> skip{{Rational(1), Value::of(-1, 2), Relation::NotEqual, "skip"}};
  CHECK(choose_center(at, skip).gamma == Value::of(3, 4));
  auto short_at = xi_stream(2, 4);
  std::vector<LinearConstraint> big{{Rational(1), Value::of(-7, 8), Relation::Greater, "big"}};
  try {
    (void)choose_center(short_at, big);
    FAIL("expected exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ApproximantsExhausted);
  }
  std::vector<LinearConstraint> bad{{Rational(0), Value::of(0), Relation::NotEqual, "always equal"}};
  CHECK_THROWS_AS(choose_center(at, bad), Error);
  std::vector<LinearConstraint> empty{{Rational(1), Value::of(-1), Relation::Greater, "g > 1"},
                                      {Rational(1), Value::of(-1, 2), Relation::Less, "g < 1/2"}};
  CHECK_THROWS_AS(choose_center(at, empty), Error);
}

TEST_CASE("centres satisfy their constraints and the pseudo-Cauchy law") {
  auto at = xi_stream(3, 12);
  at.extend(8);
  CHECK_NOTHROW(at.check());
  for (std::size_t nu = 0; nu < at.size(); ++nu)
    for (std::size_t mu = 0; mu < nu; ++mu) CHECK((at.at(nu).c - at.at(mu).c).value() == at.at(mu).gamma);
  for (long k = 1; k < 6; ++k) {
    std::vector<LinearConstraint> cs{{Rational(k), Value::of(-k, 2), Relation::NotEqual, "k"},
                                     {Rational(1), Value::of(-1, 3), Relation::Greater, "floor"}};
    auto ch = choose_center(at, cs);
    for (const auto& c : cs) CHECK(c.holds(ch.gamma));
  }
}

TEST_CASE("2-adic ambient stream") {
  auto m = FieldModel::padic(2);
  // digits 1 + 2 + 8 + 64 below precision 2^10
  auto xi = Element::padic(m, {Rational(75)}, Value::of(10));
  auto at = ApproximationType::from_ambient(m, xi);
  at.extend(3);
  CHECK(at.at(0).c.str() == "1");
  CHECK(at.at(0).gamma == Value::of(1));
  CHECK(at.at(1).c.str() == "3");
  CHECK(at.at(1).gamma == Value::of(3));
  CHECK(at.at(2).c.str() == "11");
  CHECK(at.at(2).gamma == Value::of(6));
  CHECK_FALSE(at.try_extend());
  CHECK_NOTHROW(at.check());
}
