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

#include "ramlab/extcheck.hpp"

using namespace ramlab;
using namespace ramlab::ext;

namespace {

Element tpow(const ModelPtr& m, long num, long den = 1) { return Element::monomial(m, 1, Value::of(num, den)); }

bool power_of(long n, long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("catalog matches the hand-derived table") {
  auto cat = extension_catalog();
  CHECK(cat.size() >= 20);
  for (const auto& c : cat) {
    INFO(c.name);
    auto inv = extension_invariants(c.spec);
    CHECK(inv.e == c.e);
    CHECK(inv.f == c.f);
    CHECK(inv.defect == c.defect);
    CHECK(inv.te1 == c.te1);
    CHECK(inv.te2 == c.te2);
    CHECK(inv.te3 == c.te3);
    CHECK(inv.degree == inv.e * inv.f * inv.defect);
    CHECK(power_of(inv.defect, inv.p));
    CHECK(tame_check(inv, inv.p) == (c.te1 && c.te2 && c.te3));
  }
}

TEST_CASE("X^2 - t: tame over F_3((t)), wild over F_2((t))") {
  for (long p : {2L, 3L}) {
    auto m = FieldModel::series(p, 1, ordval::GroupDescriptor::integers());
    Poly h(m, {-tpow(m, 1), Element::zero(m), Element::one(m)});
    auto inv = extension_invariants({m, h, std::nullopt});
    CHECK(inv.e == 2);
    CHECK(inv.f == 1);
    CHECK(inv.defect == 1);
    CHECK(inv.te3);
    CHECK(inv.te1 == (p == 3));
    CHECK(tame_check(inv, p) == (p == 3));
  }
}

TEST_CASE("declared data") {
  auto m = FieldModel::series(2, 1, ordval::GroupDescriptor::integers());
  Poly h4(m, {tpow(m, 1), Element::zero(m), Element::zero(m), Element::zero(m), Element::one(m)});
  auto inv = extension_invariants({m, h4, DeclaredData{2, 1, true}});
  CHECK(inv.defect == 2);
  CHECK_FALSE(inv.te3);
  CHECK_THROWS_AS(extension_invariants({m, h4, DeclaredData{3, 1, true}}), Error);
  Poly h6(m, std::vector<Element>(7, Element::one(m)));
  // defect 3 is not a power of 2
  CHECK_THROWS_AS(extension_invariants({m, h6, DeclaredData{1, 2, true}}), Error);
  auto sep = extension_invariants({m, h4, DeclaredData{1, 4, false}});
  CHECK_FALSE(sep.te2);
}

TEST_CASE("tame_check examples") {
  ExtensionInvariants a;
  a.e = 3;
  CHECK(tame_check(a, 2));
  ExtensionInvariants b;
  b.defect = 2;
  CHECK_FALSE(tame_check(b, 2));
  ExtensionInvariants c;
  c.e = 2;
  CHECK_FALSE(tame_check(c, 2));
}

TEST_CASE("reducible and undecided minimal polynomials") {
  auto m = FieldModel::series(2, 1, ordval::GroupDescriptor::integers());
  auto h = FieldModel::perfect_hull(2);
  Element one = Element::one(m);
  // X^2 - X - t is reducible (Hensel)
  CHECK_THROWS_AS(extension_invariants({m, Poly(m, {-tpow(m, 1), -one, one}), std::nullopt}), Error);
  // a = t^-2 + t^-1 = wp(t^-1) over the perfect hull
  Element oh = Element::one(h);
  Element a = tpow(h, -2) + tpow(h, -1);
  CHECK_THROWS_AS(extension_invariants({h, Poly(h, {-a, -oh, oh}), std::nullopt}), Error);
  // X^2 + t^2: slope 1 lies in vK and the reduction X^2 is not irreducible
  CHECK_THROWS_AS(extension_invariants({m, Poly(m, {tpow(m, 2), Element::zero(m), one}), std::nullopt}), Error);
  auto lin = extension_invariants({m, Poly(m, {one, one}), std::nullopt});
  CHECK(lin.degree == 1);
  CHECK(lin.tame());
  CHECK_THROWS_AS(extension_invariants({m, Poly(m, {one, tpow(m, 1)}), std::nullopt}), Error);
}

TEST_CASE("henselian element test") {
  auto m = FieldModel::series(2, 1, ordval::GroupDescriptor::integers());
  Element one = Element::one(m), zero = Element::zero(m);
  CHECK(henselian_element_test(Poly(m, {tpow(m, 1), one, one}), 0).holds);
  CHECK(henselian_element_test(Poly(m, {tpow(m, 1), one, one}), 1).holds);
  auto sq = henselian_element_test(Poly(m, {-tpow(m, 1), zero, one}), 0);
  CHECK_FALSE(sq.holds);
  CHECK(sq.reason.find("multiple") != std::string::npos);
  CHECK_FALSE(henselian_element_test(Poly(m, {tpow(m, -1), zero, one}), 0).holds);
  CHECK_FALSE(henselian_element_test(Poly(m, {one, one, one}), 0).holds);
  auto q = FieldModel::padic(2);
  CHECK(henselian_element_test(Poly(q, {Element::from_integer(q, -5), Element::one(q)}), 1).holds);
  CHECK_FALSE(henselian_element_test(Poly(q, {Element::from_integer(q, -5), Element::one(q)}), 0).holds);
}

TEST_CASE("composite immediacy examples") {
  using K = CompositeStep::Kind;
  using ordval::Divisibility;
  auto L = FieldModel::iterated(2, 1, {Divisibility::Integers, 2, 1}, {Divisibility::Integers, 2, 1});
  CHECK(composite_immediate_check(L, {}).immediate);
  CHECK(composite_immediate_check(L, {{K::Trivial, 1}}).immediate);
  auto f4 = composite_immediate_check(L, {{K::ConstantField, 2}});
  CHECK_FALSE(f4.immediate);
  auto f4l = layerwise_immediate_check(L, {{K::ConstantField, 2}});
  CHECK_FALSE(f4l.immediate);
  CHECK(f4l.reason.find("Q2-layer residue degree 2") != std::string::npos);
  auto tr = layerwise_immediate_check(L, {{K::TRoot, 2}});
  CHECK_FALSE(tr.immediate);
  CHECK(tr.reason.find("Q1 value index 2") != std::string::npos);
  CHECK_FALSE(composite_immediate_check(L, {{K::TRoot, 2}}).immediate);
  // over a 2-divisible t-group the square root of t is already there
  auto L2 = FieldModel::iterated(2, 1, {Divisibility::PDivisible, 2, 1}, {Divisibility::Integers, 2, 1});
  CHECK(composite_immediate_check(L2, {{K::TRoot, 2}}).immediate);
  CHECK(layerwise_immediate_check(L2, {{K::TRoot, 4}}).immediate);
  CHECK_THROWS_AS(composite_immediate_check(FieldModel::perfect_hull(2), {}), Error);
}

TEST_CASE("composite and layerwise checks agree on the catalog") {
  auto cat = composite_catalog();
  CHECK(cat.size() > 200);
  int immediate = 0;
  for (const auto& c : cat) {
    INFO(c.name);
    auto d = composite_immediate_check(c.L, c.steps);
    auto l = layerwise_immediate_check(c.L, c.steps);
    CHECK(d.immediate == l.immediate);
    immediate += d.immediate;
  }
  CHECK(immediate > 0);
  CHECK(immediate < static_cast<int>(cat.size()));
}

TEST_CASE("invariants multiply in towers") {
  for (long p : {2L, 3L}) {
    auto towers = tower_checks(p);
    CHECK(towers.size() == 25);
    for (const auto& t : towers) {
      INFO(t.name);
      CHECK(t.multiplicative());
    }
  }
}
