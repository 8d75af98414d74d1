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
#ifndef RAMLAB_FIELD_HPP
#define RAMLAB_FIELD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/gf.hpp"
#include "ramlab/value.hpp"

namespace ramlab {

enum class ModelKind { Series, Padic, IteratedSeries };

class FieldModel;
using ModelPtr = std::shared_ptr<const FieldModel>;

// Descriptor of one of the three concrete valued fields:
//   Series          F_q((t)) with exponents in a rank-1 group (char p)
//   Padic           Q_p, optionally extended by one Eisenstein polynomial (char 0)
//   IteratedSeries  F_q((u))((t)) with the lex valuation (t-exponent first)
class FieldModel {
 public:
  static ModelPtr series(long p, int k, ordval::GroupDescriptor exponents);
  // Perfect hull model: exponents in Z[1/p].
  static ModelPtr perfect_hull(long p, int k = 1);
  // `eisenstein` is monic, constant term first; empty means plain Q_p.
  static ModelPtr padic(long p, std::vector<Integer> eisenstein = {});
  static ModelPtr iterated(long p, int k, ordval::GroupCoordinate t_group,
                           ordval::GroupCoordinate u_group);

  ModelKind kind() const noexcept { return kind_; }
  long p() const noexcept { return p_; }
  long characteristic() const noexcept { return kind_ == ModelKind::Padic ? 0 : p_; }
  const FieldPtr& residue_field() const noexcept { return residue_; }
  // Value group of the field (for Padic: (1/e)Z).
  const ordval::GroupDescriptor& value_group() const noexcept { return group_; }
  int value_rank() const noexcept { return group_.rank; }
  int ramification() const noexcept { return e_; }
  const std::vector<Integer>& eisenstein() const noexcept { return eisenstein_; }
  bool is_perfect() const;
  // v(p); infinity in characteristic p.
  Value vp() const;

  std::string str() const;
  friend bool operator==(const FieldModel& a, const FieldModel& b);

 private:
  FieldModel() = default;

  ModelKind kind_ = ModelKind::Series;
  long p_ = 2;
  FieldPtr residue_;
  ordval::GroupDescriptor group_;
  int e_ = 1;
  std::vector<Integer> eisenstein_;
};

bool same_model(const ModelPtr& a, const ModelPtr& b);

// A finite-precision element of a FieldModel. Everything of value >= precision
// is unknown; precision = inf means the element is exact.
//
// Series elements store a finite map exponent -> nonzero F_q coefficient.
// Padic elements store rational coefficients in the basis 1, pi, ..., pi^(e-1);
// at finite precision they are reduced to canonical p-adic digit ranges.
class Element {
 public:
  using Coeff = FiniteField::Elem;
  using Terms = std::map<Value, Coeff>;

  explicit Element(ModelPtr model);

  static Element zero(const ModelPtr& m) { return Element(m); }
  static Element one(const ModelPtr& m) { return from_integer(m, 1); }
  static Element from_integer(const ModelPtr& m, const Integer& n);
  static Element from_integer(const ModelPtr& m, long n) { return from_integer(m, Integer(n)); }
  // Rationals with denominator prime to p are allowed in the series models
  // (they reduce into F_p); any rational is fine in Padic.
  static Element from_rational(const ModelPtr& m, const Rational& q);
  static Element monomial(const ModelPtr& m, Coeff c, const Value& exponent);
  static Element series(const ModelPtr& m, Terms terms, const Value& precision);
  static Element padic(const ModelPtr& m, std::vector<Rational> coeffs, const Value& precision);
  // pi^1 (p itself when there is no Eisenstein step).
  static Element uniformizer(const ModelPtr& m);
  // Element of value 0 whose residue is r (constant coefficient r / integer r).
  static Element lift_residue(const ModelPtr& m, Coeff r);
  // Element with coefficient 1 and value v; requires v in the value group.
  static Element of_value(const ModelPtr& m, const Value& v);

  const ModelPtr& model() const noexcept { return model_; }
  const Value& precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_.is_infinite(); }
  const Terms& terms() const;
  const std::vector<Rational>& padic_coeffs() const;

  // True when no nonzero term is known below the precision.
  bool is_zero() const;
  bool value_known() const { return !is_zero() || is_exact(); }
  // Throws InsufficientPrecision when the element vanishes at finite precision.
  Value value() const;
  // value() when known, otherwise the precision.
  Value value_lower_bound() const;
  Coeff residue() const;
  // Residue of x / (monomial of value v(x)).
  Coeff leading_coefficient() const;

  Element truncated(const Value& prec) const;
  Element with_precision(const Value& prec) const { return truncated(prec); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element pow(unsigned long n) const;
  Element scaled(const Integer& n) const { return *this * from_integer(model_, n); }

  // Multiplicative inverse. Exact inputs whose inverse is an infinite series
  // need `target` (absolute precision of the result).
  Element inverse(std::optional<Value> target = std::nullopt) const;
  Element divided_by(const Element& d, std::optional<Value> target = std::nullopt) const {
    return *this * d.inverse(target);
  }

  // Characteristic-p maps.
  Element frobenius() const;
  Element frobenius_root() const;

  // Structural identity (same model, same stored data, same precision).
  bool identical(const Element& o) const;
  // a - b vanishes at the common precision.
  bool equal_at_precision(const Element& o) const { return (*this - o).is_zero(); }

  std::string str(bool with_precision = true) const;

 private:
  void normalize();
  void require_same_model(const Element& o) const;

  ModelPtr model_;
  Value prec_;
  Terms terms_;
  std::vector<Rational> coeffs_;
};

// p-adic order of a nonzero rational.
long padic_order(const Rational& q, long p);

}  // namespace ramlab

#endif
