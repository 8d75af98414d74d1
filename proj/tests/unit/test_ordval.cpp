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

#include "ramlab/rng.hpp"
#include "ramlab/value.hpp"

using namespace ramlab;
using ordval::DeltaContext;
using ordval::GroupDescriptor;

namespace {

Value rnd_value(Rng& rng) { return Value(make_rational(rng.range(-60, 60), rng.range(1, 16))); }

// i-fold application, used as the reference for the closed form
Value iterate(const DeltaContext& ctx, long i, Value g) {
  for (long k = 0; k < i; ++k) g = ctx.delta(g);
  return g;
}

}  // namespace

TEST_CASE("compare") {
  CHECK(compare(Value::of(0), Value::of(0)) == 0);
  CHECK(Value(Rational(1), Rational(0)) > Value(Rational(0), Rational(5)));
  CHECK(Value::infinity() > Value::of(1000000));
  CHECK_THROWS_AS((void)(Value::of(1) < Value(Rational(0), Rational(0))), Error);
  CHECK(Value(Rational(0), Rational(-1)) < Value(Rational(0), Rational(0)));
  CHECK(Value::infinity(2) > Value(Rational(5), Rational(5)));
}

TEST_CASE("infinity absorbs addition") {
  CHECK((Value::infinity() + Value::of(-7)).is_infinite());
  CHECK_THROWS_AS(-Value::infinity(), Error);
}

TEST_CASE("parse and print") {
  CHECK(Value::parse("3/2") == Value::of(3, 2));
  CHECK(Value::parse(" inf ").is_infinite());
  CHECK(Value::parse("(1, -2/3)") == Value(Rational(1), make_rational(-2, 3)));
  CHECK(Value::parse("(1, -2/3)").str() == "(1, -2/3)");
  CHECK(Value::of(6, 4).str() == "3/2");
  CHECK_THROWS_AS(Value::parse("1/0"), Error);
  CHECK_THROWS_AS(Value::parse("(1,2"), Error);
  CHECK_THROWS_AS(Value::parse("abc"), Error);
}

TEST_CASE("group descriptors") {
  auto g = GroupDescriptor::p_divisible(2);
  CHECK(g.contains(Value::of(3, 8)));
  CHECK_FALSE(g.contains(Value::of(1, 3)));
  CHECK(GroupDescriptor::integers().contains(Value::of(-4)));
  CHECK_FALSE(GroupDescriptor::integers().contains(Value::of(1, 2)));
  CHECK(GroupDescriptor::rationals().contains(Value::of(1, 7)));
  CHECK(g.is_p_divisible(2));
  CHECK_FALSE(g.is_p_divisible(3));
}

TEST_CASE("delta examples") {
  DeltaContext c2(2, Value::of(1)), c3(3, Value::of(1));
  CHECK(c2.delta(Value::of(0)) == Value::of(1));
  CHECK(c2.delta(Value::of(2)) == Value::of(2));
  CHECK(c3.delta(Value::of(3)) == Value::of(2));
  CHECK(c2.delta_iter(2, Value::of(0)) == Value::of(3, 2));
  CHECK(c2.delta_iter(-1, Value::of(3, 2)) == Value::of(1));
  CHECK(c3.delta_iter(0, Value::of(5, 7)) == Value::of(5, 7));
  CHECK_THROWS_AS(c2.delta(Value::infinity()), Error);
  CHECK_THROWS_AS(c2.delta(Value(Rational(1), Rational(0))), Error);
}

TEST_CASE("delta value law") {
  DeltaContext c2(2, Value::of(1)), c3(3, Value::of(1));
  auto g2 = GroupDescriptor::p_divisible(2);
  CHECK(c2.delta_value_law(Value::of(4), g2) == Value::of(3));
  CHECK(c2.delta_value_law(Value::of(2), g2) == Value::of(2));
  CHECK(c3.delta_value_law(Value::of(0), GroupDescriptor::rationals()) == Value::of(1));
  CHECK_THROWS_AS(c2.delta_value_law(Value::of(1), GroupDescriptor::integers()), Error);
}

TEST_CASE("delta properties on random values") {
  Rng rng(11);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 50; ++trial) {
      DeltaContext ctx(p, Value(make_rational(rng.range(1, 6), rng.range(1, 4))));
      Value fp = ctx.fixed_point();
      CHECK(ctx.delta(fp) == fp);
      Value a = rnd_value(rng), b = rnd_value(rng);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      CHECK(ctx.delta(a) < ctx.delta(b));
      if (a < fp) CHECK(ctx.delta(a) > a);
      for (long i = 0; i <= 10; ++i) {
        CHECK(ctx.delta_iter(i, a) == iterate(ctx, i, a));
        CHECK(ctx.delta_iter(-i, ctx.delta_iter(i, a)) == a);
      }
      // delta maps [delta^i(0), fp] into [delta^(i+1)(0), fp]
      for (long i = 0; i < 6; ++i) {
        Value lo = ctx.delta_iter(i, Value::of(0));
        Value mid = Value((lo.q() + fp.q()) / 2);
        for (const auto& g : {lo, mid, fp}) {
          Value img = ctx.delta(g);
          CHECK(img >= ctx.delta_iter(i + 1, Value::of(0)));
          CHECK(img <= fp);
        }
      }
    }
  }
}
