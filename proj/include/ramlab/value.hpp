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
#ifndef RAMLAB_VALUE_HPP
#define RAMLAB_VALUE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ramlab/error.hpp"

namespace ramlab {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_str(const Rational& q);
Rational parse_rational(std::string_view text);

// Element of a rank-1 or lexicographic rank-2 ordered group, extended by +inf.
// Infinity carries a rank so that mixing ranks is always detected.
class Value {
 public:
  Value() : Value(Rational(0)) {}
  explicit Value(const Rational& x) : rank_(1), infinite_(false), c_{x, 0} {}
  Value(const Rational& major, const Rational& minor)
      : rank_(2), infinite_(false), c_{major, minor} {}

  static Value infinity(int rank = 1);
  static Value of(long num, long den = 1) { return Value(make_rational(num, den)); }

  int rank() const noexcept { return rank_; }
  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }

  // Rank-1 coordinate; throws on infinity or rank 2.
  const Rational& q() const;

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator-() const;
  Value scaled(const Rational& s) const;
  Value& operator+=(const Value& o) { return *this = *this + o; }

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend std::strong_ordering compare(const Value& a, const Value& b);

  std::string str() const;
  static Value parse(std::string_view text);

 private:
  int rank_;
  bool infinite_;
  std::array<Rational, 2> c_;
};

std::strong_ordering compare(const Value& a, const Value& b);
Value min(const Value& a, const Value& b);
Value max(const Value& a, const Value& b);

namespace ordval {

enum class Divisibility { Integers, PDivisible, Rationals };

// A subgroup of Q (or Q x Q lex): (1/denominator) * base, where base is Z,
// Z[1/p] or Q.
struct GroupCoordinate {
  Divisibility kind = Divisibility::Integers;
  long p = 0;
  long denominator = 1;

  bool contains(const Rational& x) const;
  std::string str() const;
};

struct GroupDescriptor {
  int rank = 1;
  std::array<GroupCoordinate, 2> coords{};

  static GroupDescriptor integers();
  static GroupDescriptor p_divisible(long p);
  static GroupDescriptor rationals();
  static GroupDescriptor lex(GroupCoordinate major, GroupCoordinate minor);

  bool contains(const Value& v) const;
  bool is_p_divisible(long p) const;
  std::string str() const;
};

// (p, v(p)) data for the delta calculus delta(g) = v(p) + g/p.
class DeltaContext {
 public:
  DeltaContext(long p, Value vp);

  long p() const noexcept { return p_; }
  const Value& vp() const noexcept { return vp_; }
  // p/(p-1) * v(p)
  Value fixed_point() const;

  Value delta(const Value& g) const;
  // Closed form of the i-th iterate; negative i gives the inverse iterates.
  Value delta_iter(long i, const Value& g) const;
  Value delta_inverse(const Value& g) const { return delta_iter(-1, g); }
  // Value of Delta(a) = -p a^(1/p) for v(a) = va. The group must be p-divisible.
  Value delta_value_law(const Value& va, const GroupDescriptor& group) const;

 private:
  long p_;
  Value vp_;
};

}  // namespace ordval
}  // namespace ramlab

#endif
