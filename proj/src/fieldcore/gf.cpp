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
#include "ramlab/gf.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

// Conway polynomials, constant term first, leading 1 included.
const std::map<std::pair<long, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<long, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

bool is_small_prime(long p) {
  if (p < 2 || p > 65521) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::get(long p, int k) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (!is_small_prime(p)) fail(ErrorCode::Unsupported, "F_q needs a prime p < 2^16");
  std::vector<int> modulus;
  if (k != 1) {
    auto it = modulus_table().find(key);
    if (it == modulus_table().end())
      fail(ErrorCode::Unsupported, "no modulus shipped for F_" + std::to_string(p) + "^" +
                                       std::to_string(k));
    modulus = it->second;
  }
  std::shared_ptr<const FiniteField> f(new FiniteField(p, k, std::move(modulus)));
  cache.emplace(key, f);
  return f;
}

FiniteField::FiniteField(long p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= static_cast<std::uint64_t>(p);
  if (q > (1u << 16)) fail(ErrorCode::Unsupported, "F_q limited to q <= 65536");
  q_ = static_cast<Elem>(q);
  // find a generator of the multiplicative group by brute force
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t n = q_ - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto f : prime_factors)
      if (slow_pow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (q_ == 2) generator_ = 1;
  exp_.resize(q_);
  log_.assign(q_, 0);
  Elem x = 1;
  for (Elem i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
  if (x != 1) fail(ErrorCode::Unsupported, "shipped modulus is not irreducible");
}

std::vector<int> FiniteField::digits(Elem a) const {
  std::vector<int> d(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= static_cast<Elem>(p_);
  }
  return d;
}

FiniteField::Elem FiniteField::pack(std::span<const int> d) const {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * static_cast<Elem>(p_) + static_cast<Elem>(d[i]);
  return a;
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  auto da = digits(a), db = digits(b);
  std::vector<long> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + long(da[i]) * db[j]) % p_;
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    long c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (int j = 0; j < k_; ++j) prod[i - k_ + j] = ((prod[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
  }
  std::vector<int> out(prod.begin(), prod.begin() + k_);
  return pack(out);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((a + b) % p_);
  auto da = digits(a), db = digits(b);
  for (int i = 0; i < k_; ++i) da[i] = static_cast<int>((da[i] + db[i]) % p_);
  return pack(da);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return static_cast<Elem>((p_ - a) % p_);
  auto da = digits(a);
  for (int i = 0; i < k_; ++i) da[i] = static_cast<int>((p_ - da[i]) % p_);
  return pack(da);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::Precondition, "inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pth_root(Elem a) const {
  // a^(q/p) is the inverse of Frobenius
  return pow(a, q_ / static_cast<Elem>(p_));
}

FiniteField::Elem FiniteField::from_integer(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::gen_power(long e) const {
  long m = static_cast<long>(q_ - 1);
  long r = ((e % m) + m) % m;
  return exp_[static_cast<std::size_t>(r)];
}

std::string FiniteField::str(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "g^" + std::to_string(log_[a]);
}

int GfPoly::degree() const {
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) return static_cast<int>(i);
  return -1;
}

void GfPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FiniteField::Elem GfPoly::eval(FiniteField::Elem x) const {
  FiniteField::Elem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = field->add(field->mul(r, x), c[i]);
  return r;
}

GfPoly GfPoly::derivative() const {
  GfPoly d{field, {}};
  for (std::size_t i = 1; i < c.size(); ++i)
    d.c.push_back(field->mul(field->from_integer(static_cast<long>(i)), c[i]));
  d.trim();
  return d;
}

GfPoly gf_mod(const GfPoly& a, const GfPoly& m) {
  int dm = m.degree();
  if (dm < 0) fail(ErrorCode::Precondition, "polynomial division by zero");
  GfPoly r = a;
  r.trim();
  const auto& F = *m.field;
  auto lead_inv = F.inv(m.c[dm]);
  for (int i = r.degree(); i >= dm; i = r.degree()) {
    auto f = F.mul(r.c[i], lead_inv);
    for (int j = 0; j <= dm; ++j) r.c[i - dm + j] = F.sub(r.c[i - dm + j], F.mul(f, m.c[j]));
    r.trim();
  }
  return r;
}

GfPoly gf_mul(const GfPoly& a, const GfPoly& b) {
  GfPoly r{a.field, {}};
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  const auto& F = *a.field;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  r.trim();
  return r;
}

GfPoly gf_sub(const GfPoly& a, const GfPoly& b) {
  GfPoly r{a.field, a.c};
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = a.field->sub(r.c[i], b.c[i]);
  r.trim();
  return r;
}

GfPoly gf_gcd(GfPoly a, GfPoly b) {
  a.trim();
  b.trim();
  while (b.degree() >= 0) {
    auto r = gf_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() >= 0) {
    auto li = a.field->inv(a.c[a.degree()]);
    for (auto& x : a.c) x = a.field->mul(x, li);
  }
  return a;
}

GfPoly gf_powmod(const GfPoly& base, const Integer& e, const GfPoly& m) {
  GfPoly result{base.field, {1}};
  GfPoly b = gf_mod(base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = gf_mod(gf_mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = gf_mod(gf_mul(result, b), m);
  }
  return result;
}

bool gf_is_irreducible(const GfPoly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  GfPoly x{f.field, {0, 1}};
  Integer q = f.field->order();
  GfPoly xq = x;
  for (int i = 1; i <= n / 2; ++i) {
    xq = gf_powmod(xq, q, f);
    auto g = gf_gcd(f, gf_sub(xq, x));
    if (g.degree() > 0) return false;
  }
  return true;
}

}  // namespace ramlab
