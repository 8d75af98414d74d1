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
#ifndef RAMLAB_POLY_HPP
#define RAMLAB_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ramlab/field.hpp"

namespace ramlab {

// Dense univariate polynomial over a FieldModel, constant term first.
class Poly {
 public:
  explicit Poly(ModelPtr m) : model_(std::move(m)) {}
  Poly(ModelPtr m, std::vector<Element> coeffs);

  static Poly constant(const Element& a);
  static Poly variable(const ModelPtr& m);
  // a * X^k
  static Poly monomial(const Element& a, std::size_t k);
  // (X - c) / d, as a polynomial in X
  static Poly linear(const Element& c, const Element& d);

  const ModelPtr& model() const noexcept { return model_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Element>& coeffs() const noexcept { return c_; }
  Element coeff(std::size_t i) const;
  bool is_exact() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scaled(const Element& a) const;
  Poly pow(unsigned long n) const;

  Element eval(const Element& x) const;
  // f(c + d*Z) as a polynomial in Z
  Poly substitute_linear(const Element& c, const Element& d) const;
  // Hasse-Taylor coefficients at a concrete point: f(c + Y) = sum_i out[i] Y^i.
  std::vector<Element> taylor_at(const Element& c) const;
  Poly derivative() const;
  Poly truncated(const Value& prec) const;
  // Coefficientwise Frobenius with X -> X^p; equals f^p in characteristic p.
  Poly frobenius() const;

  bool identical(const Poly& o) const;
  // every coefficient of the difference vanishes at its precision
  bool equal_at_precision(const Poly& o) const { return (*this - o).is_zero(); }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();

  ModelPtr model_;
  std::vector<Element> c_;
};

// Binomial coefficient as an integer.
Integer binomial(unsigned long n, unsigned long k);

// Polynomial in one variable with exponents in Z[1/p], coefficients in a
// characteristic-p model. Arises when p-th roots of polynomials are taken.
class PuiseuxPoly {
 public:
  using Terms = std::map<Rational, Element>;

  explicit PuiseuxPoly(ModelPtr m) : model_(std::move(m)) {}
  static PuiseuxPoly from_poly(const Poly& f);

  const ModelPtr& model() const noexcept { return model_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Rational& exponent, const Element& coeff);
  PuiseuxPoly operator+(const PuiseuxPoly& o) const;
  PuiseuxPoly operator*(const PuiseuxPoly& o) const;
  PuiseuxPoly frobenius() const;
  PuiseuxPoly frobenius_root() const;
  // least lambda with p^lambda * every exponent integral
  long integrality_exponent() const;
  // Only when all exponents are nonnegative integers.
  Poly to_poly() const;
  Element eval(const Element& x) const;

  std::string str(const std::string& var = "X0") const;

 private:
  ModelPtr model_;
  Terms terms_;
};

}  // namespace ramlab

#endif
