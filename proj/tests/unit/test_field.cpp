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

#include "ramlab/field.hpp"
#include "ramlab/rng.hpp"

using namespace ramlab;

namespace {

ModelPtr f2() { return FieldModel::perfect_hull(2); }
ModelPtr q2() { return FieldModel::padic(2); }

Element tpow(const ModelPtr& m, long num, long den = 1) { return Element::monomial(m, 1, Value::of(num, den)); }

Element padic(const ModelPtr& m, long n, long prec) {
  return Element::padic(m, {Rational(n)}, Value::of(prec));
}

Element rnd_series(const ModelPtr& m, Rng& rng, long prec) {
  Element::Terms t;
  long q = m->residue_field()->order(), den = m->p() * m->p();
  for (int i = 0; i < 4; ++i)
    t.emplace(Value::of(rng.range(-2 * den, 2 * den), den), static_cast<Element::Coeff>(rng.range(1, q - 1)));
  return Element::series(m, t, Value::of(prec));
}

}  // namespace

TEST_CASE("series addition cancels in characteristic 2") {
  auto m = f2();
  auto a = tpow(m, 1) + tpow(m, 2);
  CHECK((a + tpow(m, 1)).identical(tpow(m, 2)));
}

TEST_CASE("series inverse is the geometric series") {
  auto m = f2();
  auto x = (Element::one(m) + tpow(m, 1)).truncated(Value::of(4));
  auto r = x.inverse();
  CHECK(r.str() == "1 + t + t^2 + t^3 @prec 4");
  CHECK((x * r).equal_at_precision(Element::one(m)));
  auto exact = Element::one(m) + tpow(m, 1);
  CHECK(exact.inverse(Value::of(4)).str() == "1 + t + t^2 + t^3 @prec 4");
  CHECK_THROWS_AS(exact.inverse(), Error);
}

TEST_CASE("p-adic inverse") {
  auto m = q2();
  auto r = padic(m, 3, 5).inverse();
  // 3 * 11 = 33 = 1 mod 32
  CHECK(r.str() == "11 @prec 2^5");
  CHECK(r.precision() == Value::of(5));
}

TEST_CASE("values") {
  auto m = f2();
  CHECK((tpow(m, 1, 2) + tpow(m, 1)).value() == Value::of(1, 2));
  CHECK(Element::from_integer(q2(), 12).value() == Value::of(2));
  auto z = Element::zero(m).truncated(Value::of(10));
  CHECK_THROWS_AS(z.value(), Error);
  try {
    (void)z.value();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrecision);
  }
  CHECK(Element::zero(m).value().is_infinite());
}

TEST_CASE("residues") {
  auto m = f2();
  CHECK((Element::one(m) + tpow(m, 1)).residue() == 1);
  CHECK(Element::from_integer(q2(), 6).residue() == 0);
  CHECK(Element::from_integer(q2(), 7).residue() == 1);
  CHECK_THROWS_AS(tpow(m, -1).residue(), Error);
  CHECK(Element::from_rational(q2(), make_rational(1, 3)).residue() == 1);
}

TEST_CASE("p-adic precision reduces to canonical digits") {
  auto m = q2();
  CHECK(padic(m, -1, 4).str() == "15 @prec 2^4");
  CHECK(Element::padic(m, {make_rational(1, 3)}, Value::of(3)).str() == "3 @prec 2^3");
  CHECK(Element::padic(m, {make_rational(3, 4)}, Value::of(3)).str() == "3/4 @prec 2^3");
  auto a = padic(m, 12, 6) * padic(m, 5, 3);
  // 12 has value 2 so the product is known to 2 + 3
  CHECK(a.precision() == Value::of(5));
}

TEST_CASE("Eisenstein extension") {
  // pi^2 = 2
  auto m = FieldModel::padic(2, {Integer(-2), Integer(0), Integer(1)});
  auto pi = Element::uniformizer(m);
  CHECK(pi.value() == Value::of(1, 2));
  CHECK((pi * pi).identical(Element::from_integer(m, 2)));
  auto x = Element::one(m) + pi;
  CHECK((x * x.inverse()).identical(Element::one(m)));
  CHECK(Element::of_value(m, Value::of(-3, 2)).value() == Value::of(-3, 2));
  CHECK_THROWS_AS(FieldModel::padic(2, {Integer(-4), Integer(0), Integer(1)}), Error);
}

TEST_CASE("frobenius root") {
  auto m = f2();
  auto a = tpow(m, 3) + tpow(m, 4);
  CHECK(a.frobenius_root().str() == "t^3/2 + t^2");
  CHECK(a.frobenius_root().frobenius().identical(a));
  auto laurent = FieldModel::series(2, 1, ordval::GroupDescriptor::integers());
  CHECK_THROWS_AS(tpow(laurent, 3).frobenius_root(), Error);
}

TEST_CASE("F_4 coefficients print as generator powers") {
  auto m = FieldModel::perfect_hull(2, 2);
  auto g = m->residue_field()->generator();
  auto x = Element::monomial(m, g, Value::of(1));
  CHECK(x.str() == "g^1*t");
  CHECK((x * x).str() == "g^2*t^2");
}

TEST_CASE("rank-2 elements") {
  auto m = FieldModel::iterated(2, 1, {}, {});
  auto x = Element::monomial(m, 1, Value(Rational(1), Rational(-1)));
  CHECK(x.str() == "t*u^-1");
  CHECK(x.inverse().value() == Value(Rational(-1), Rational(1)));
  auto y = x + Element::monomial(m, 1, Value(Rational(0), Rational(5)));
  CHECK(y.value() == Value(Rational(0), Rational(5)));
  CHECK_THROWS_AS(y.truncated(Value(Rational(3), Rational(0))).inverse(), Error);
}

TEST_CASE("model mismatch") {
  CHECK_THROWS_AS(Element::one(f2()) + Element::one(q2()), Error);
}

TEST_CASE("ring axioms and ultrametric law at precision") {
  Rng rng(3);
  for (long p : {2L, 3L}) {
    auto m = FieldModel::perfect_hull(p);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = rnd_series(m, rng, 6), b = rnd_series(m, rng, 5), c = rnd_series(m, rng, 7);
      CHECK(((a + b) + c).equal_at_precision(a + (b + c)));
      CHECK((a * (b + c)).equal_at_precision(a * b + a * c));
      auto s = a + b;
      if (!a.is_zero() && !b.is_zero()) {
        CHECK(s.value_lower_bound() >= min(a.value(), b.value()));
        if (a.value() != b.value()) CHECK(s.value() == min(a.value(), b.value()));
        CHECK((a * b).value() == a.value() + b.value());
      }
    }
  }
  auto m = q2();
  for (int trial = 0; trial < 200; ++trial) {
    long x = rng.range(1, 1000), y = rng.range(1, 1000);
    auto a = padic(m, x, 12), b = padic(m, y, 12);
    CHECK((a * b).value() == a.value() + b.value());
    if (x % 2 && y % 2) CHECK((a * b).residue() == 1);
  }
}
