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

#include "ramlab/ops.hpp"
#include "ramlab/rng.hpp"

using namespace ramlab;

namespace {

ModelPtr q2() { return FieldModel::padic(2); }
Element n2(long n) { return Element::from_integer(q2(), n); }
Element tpow(const ModelPtr& m, long num, long den = 1) { return Element::monomial(m, 1, Value::of(num, den)); }

// A nonzero 2-adic rational 2^k u is a square iff k is even and u is a square
// mod 32 (searched exhaustively); Hensel lifts any such residue root.
bool oracle_square(const Rational& q) {
  Integer num = q.get_num(), den = q.get_den();
  long k = 0;
  while (num % 2 == 0) { num /= 2; ++k; }
  while (den % 2 == 0) { den /= 2; --k; }
  if (k % 2) return false;
  Integer u = num * den;  // same square class as num / den
  Integer r = u % 32;
  if (r < 0) r += 32;
  for (long x = 1; x < 32; x += 2)
    if ((x * x) % 32 == r.get_si()) return true;
  return false;
}

Rational random_two_adic(Rng& rng, long min_order) {
  long k = rng.range(min_order, min_order + 5);
  long num = 2 * rng.range(0, 200) + 1;
  if (rng.coin()) num = -num;
  long den = 2 * rng.range(0, 30) + 1;
  Rational q(num, den);
  q.canonicalize();
  for (long i = 0; i < k; ++i) q *= 2;
  return q;
}

}  // namespace

TEST_CASE("p-th roots in characteristic p") {
  auto m = FieldModel::perfect_hull(2);
  auto a = tpow(m, 3) + tpow(m, 4);
  CHECK(pth_root(a).str() == "t^3/2 + t^2");
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Element::Terms t;
    for (int j = 0; j < 3; ++j) t.emplace(Value::of(rng.range(-16, 16), 8), 1);
    auto x = Element::series(m, t, Value::of(rng.range(3, 9)));
    CHECK(pth_root(x.pow(2)).equal_at_precision(x));
  }
}

TEST_CASE("2-adic square roots") {
  auto m = q2();
  auto a = Element::padic(m, {Rational(17)}, Value::of(6));
  auto r = pth_root(a);
  Integer rep = r.padic_coeffs()[0].get_num();
  CHECK((rep * rep - 17) % 64 == 0);
  CHECK(rep % 4 == 1);
  CHECK_THROWS_AS(pth_root(n2(5)), Error);
  CHECK(pth_root(n2(9)).identical(n2(3)));
  // 4 * 17 is a square with root 2 * (root of 17)
  auto s = pth_root(n2(68), Value::of(10));
  CHECK((s * s - n2(68)).is_zero());
  CHECK(s.value() == Value::of(1));
}

TEST_CASE("p-th power verdicts") {
  auto r9 = is_pth_power(n2(9));
  CHECK(r9.verdict == PowerVerdict::Yes);
  CHECK(r9.root->identical(n2(3)));
  CHECK(is_pth_power(n2(5)).verdict == PowerVerdict::No);
  CHECK(is_pth_power(n2(2)).verdict == PowerVerdict::No);
  CHECK(is_pth_power(Element::padic(q2(), {Rational(1)}, Value::of(2))).verdict == PowerVerdict::Insufficient);
  auto m = FieldModel::perfect_hull(2);
  auto y = is_pth_power(tpow(m, 1) + tpow(m, 3, 4));
  CHECK(y.verdict == PowerVerdict::Yes);
  CHECK(y.root->str() == "t^3/8 + t^1/2");
  auto q3 = FieldModel::padic(3);
  CHECK(is_pth_power(Element::from_integer(q3, 10)).verdict == PowerVerdict::Yes);  // 10 = 1 mod 9
  CHECK(is_pth_power(Element::from_integer(q3, 4)).verdict == PowerVerdict::No);
  CHECK(is_pth_power(Element::from_integer(q3, 8)).verdict == PowerVerdict::Yes);  // -1 * (1-unit)
  for (long n = 1; n < 300; ++n) {
    auto v = is_pth_power(n2(n)).verdict;
    CHECK((v == PowerVerdict::Yes) == oracle_square(Rational(n)));
  }
}

TEST_CASE("Hensel lifting") {
  auto m = FieldModel::series(2, 1, ordval::GroupDescriptor::integers());
  auto X = Poly::variable(m);
  auto f = X * X + X + Poly::constant(tpow(m, 1));
  auto r = hensel_lift(f, 0, Value::of(9));
  CHECK(r.str(false) == "t + t^2 + t^4 + t^8");
  CHECK(f.eval(r).is_zero());
  auto a = tpow(m, 0) + tpow(m, 2);
  CHECK(hensel_lift(X - Poly::constant(a), 1, Value::of(5)).str(false) == "1 + t^2");
  try {
    (void)hensel_lift(X * X - Poly::constant(tpow(m, 1)), 0, Value::of(5));
    FAIL("expected multiple root");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MultipleRoot);
  }
  auto g = X * X + X + Poly::constant(tpow(m, -1));
  try {
    (void)hensel_lift(g, 0, Value::of(5));
    FAIL("expected non-integral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIntegral);
  }
  // X - 5 over the 2-adics
  auto q = q2();
  auto Y = Poly::variable(q);
  CHECK(hensel_lift(Y - Poly::constant(n2(5)), 1, Value::of(8)).identical(Element::padic(q, {Rational(5)}, Value::of(8))));
}

TEST_CASE("one-unit shift a") {
  auto w = one_unit_shift_a(n2(2), n2(8), Value::of(12));
  CHECK(w.lhs.identical(n2(3)));
  CHECK(w.rhs.identical(n2(11)));
  CHECK(w.verify());
  CHECK_THROWS_AS(one_unit_shift_a(n2(2), n2(4)), Error);
  CHECK(one_unit_shift_a(n2(2), n2(0)).root.identical(n2(1)));
  auto m = FieldModel::perfect_hull(2);
  CHECK_THROWS_AS(one_unit_shift_a(tpow(m, 1), tpow(m, 2)), Error);
}

TEST_CASE("one-unit shift b with a supplied root") {
  // 1 + c = 9 = 3^2, v(bc) = 1 + 3 > 2
  auto w = one_unit_shift_b(n2(2), n2(8), n2(3), Value::of(12));
  CHECK(w.verify());
  CHECK_THROWS_AS(one_unit_shift_b(n2(2), n2(8), n2(5)), Error);
}

TEST_CASE("one-unit shift c") {
  auto w = one_unit_shift_c(n2(2), n2(2), Value::of(12));
  CHECK(w.lhs.identical(n2(-1)));
  CHECK(w.rhs.identical(n2(7)));
  CHECK(w.verify());
  CHECK_THROWS_AS(one_unit_shift_c(n2(2), n2(1)), Error);
  CHECK(one_unit_shift_c(n2(2), n2(0)).verify());
}

TEST_CASE("Delta inverse rewrite") {
  auto [D, w] = rewrite_delta_inverse(n2(2), n2(-4), Value::of(12));
  CHECK(D.identical(n2(4)));
  CHECK(w.verify());
  auto [Z, wz] = rewrite_delta_inverse(n2(2), n2(0));
  CHECK(Z.is_zero());
  CHECK(wz.verify());
  CHECK_THROWS_AS(rewrite_delta_inverse(n2(2), n2(2)), Error);
}

TEST_CASE("one-unit shifts agree with the square oracle") {
  Rng rng(7);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Rational b = random_two_adic(rng, 1), c = random_two_adic(rng, 3);
    auto w = one_unit_shift_a(n2(0) + Element::from_rational(q2(), b), Element::from_rational(q2(), c), Value::of(12));
    CHECK(w.verify());
    CHECK(oracle_square((1 + b) / (1 + b + c)));
    Rational c2 = random_two_adic(rng, 1);
    auto w2 = one_unit_shift_c(Element::from_rational(q2(), b), Element::from_rational(q2(), c2), Value::of(12));
    CHECK(w2.verify());
    CHECK(oracle_square((1 + b - 2 * c2) / (1 + b + c2 * c2)));
    ++checked;
  }
  CHECK(checked == 200);
}
