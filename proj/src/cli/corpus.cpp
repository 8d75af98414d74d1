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
#include "ramlab/corpus.hpp"

#include <set>

#include "ramlab/rng.hpp"

namespace ramlab::corpus {

std::vector<Instance> artin_schreier(long p, std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  // quarters need 2 | p^k; for odd p the grid is (1/p)[-2p, 2p]
  long den = p == 2 ? 4 : p;
  std::vector<Instance> out;
  while (out.size() < count) {
    auto at = xi_stream(p, 40);
    const auto& m = at.model();
    long n = rng.range(1, 6);
    std::vector<Element> cs;
    for (long i = 0; i <= n; ++i) {
      Element::Terms terms;
      long k = i == n ? rng.range(1, 3) : rng.range(0, 3);
      for (long j = 0; j < k; ++j)
        terms[Value::of(rng.range(-2 * den, 2 * den), den)] = static_cast<Element::Coeff>(rng.range(1, p - 1));
      cs.push_back(Element::series(m, terms, Value::infinity(1)));
    }
    Poly f(m, cs);
    if (f.degree() < 1) continue;
    out.push_back({"F_" + std::to_string(p), f, at});
  }
  return out;
}

ModelPtr two_adic_ramified() {
  return FieldModel::padic(2, {Integer(-2), Integer(0), Integer(0), Integer(0), Integer(1)});
}

std::vector<Instance> kummer(std::uint64_t seed, std::size_t count) {
  auto m = two_adic_ramified();
  Rng rng(seed);
  Element one = Element::one(m);
  Element pi = Element::uniformizer(m);
  auto unit = [&]() {
    std::vector<Rational> c{Rational(rng.coin() ? 2 * rng.range(0, 3) + 1 : 1)};
    for (int j = 1; j < 4; ++j) c.push_back(Rational(rng.range(0, 1)));
    return Element::padic(m, c, Value::infinity(1));
  };
  auto with_value = [&](long quarters) { return Element::of_value(m, Value::of(quarters, 4)) * unit(); };
  std::vector<Instance> out;
  while (out.size() < count) {
    bool small = out.size() % 2 == 0;
    long k = rng.range(1, 3);
    long n = rng.range(1, 4);
    std::vector<Element> d(static_cast<std::size_t>(n + 1), Element::zero(m));
    Element w = unit();
    d[0] = pi * pi * w * w;
    long v1 = small ? rng.range(3, 4) : rng.range(5, 6);
    d[1] = with_value(v1);
    std::set<long> used{v1};
    for (long i = 2; i <= n; ++i) {
      if (rng.range(0, 3) == 0) continue;
      long v = 0;
      for (int guard = 0; guard < 50; ++guard) {
        v = i % 2 == 0 ? 2 * rng.range(v1 / 2 + 1, 6) : rng.range(v1 + 1, 12);
        if (!used.count(v)) break;
      }
      if (i % 2 == 0) {
        Element r = with_value(v / 2);
        d[static_cast<std::size_t>(i)] = r * r;
      } else {
        d[static_cast<std::size_t>(i)] = with_value(v);
      }
      used.insert(v);
    }
    if (n >= 4 && !d[2].is_zero() && !d[4].is_zero() && !(d[2].value() < d[4].value())) continue;
    // f(x) = sum d_i ((x - 1)/a)^i
    Element a = Element::of_value(m, Value::of(k, 4));
    Poly lin = Poly::linear(one, a), f(m), pw = Poly::constant(one);
    for (const auto& di : d) {
      f += pw.scaled(di);
      pw = pw * lin;
    }
    // the digit at 1/4 keeps the second centre close
    Element t = one;
    for (long j = 1; j < 40; ++j)
      if (j == 1 || rng.range(0, 2) != 0) t = t + Element::of_value(m, Value::of(j, 4));
    Element xi = (one + a * t).truncated(Value::of(12));
    out.push_back({small ? "small" : "large", f, ApproximationType::from_ambient(m, xi)});
  }
  return out;
}

}  // namespace ramlab::corpus
