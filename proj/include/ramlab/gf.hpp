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
#ifndef RAMLAB_GF_HPP
#define RAMLAB_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ramlab/value.hpp"

namespace ramlab {

// F_q, q = p^k, built over the fixed modulus listed in the shipped table.
// An element is its base-p digit vector packed into an integer, so the prime
// field F_p is embedded as 0..p-1.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static std::shared_ptr<const FiniteField> get(long p, int k);

  long p() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  Elem order() const noexcept { return q_; }
  // Coefficients of the monic modulus, constant term first (empty for k = 1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  // Unique p-th root (the field is perfect).
  Elem pth_root(Elem a) const;
  Elem from_integer(long n) const;
  Elem gen_power(long e) const;

  std::string str(Elem a) const;

 private:
  FiniteField(long p, int k, std::vector<int> modulus);
  std::vector<int> digits(Elem a) const;
  Elem pack(std::span<const int> d) const;
  Elem slow_mul(Elem a, Elem b) const;

  long p_;
  int k_;
  Elem q_;
  std::vector<int> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Polynomials over a small finite field, constant term first; used for
// residue-field computations (reductions, irreducibility, root checks).
struct GfPoly {
  FieldPtr field;
  std::vector<FiniteField::Elem> c;

  int degree() const;
  void trim();
  FiniteField::Elem eval(FiniteField::Elem x) const;
  GfPoly derivative() const;
};

GfPoly gf_mod(const GfPoly& a, const GfPoly& m);
GfPoly gf_mul(const GfPoly& a, const GfPoly& b);
GfPoly gf_sub(const GfPoly& a, const GfPoly& b);
GfPoly gf_gcd(GfPoly a, GfPoly b);
GfPoly gf_powmod(const GfPoly& base, const Integer& e, const GfPoly& m);
bool gf_is_irreducible(const GfPoly& f);

}  // namespace ramlab

#endif
