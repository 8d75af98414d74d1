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
#include "ramlab/value.hpp"

#include <cctype>
#include <string>

namespace ramlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "rank-mismatch";
    case ErrorCode::InfiniteInput: return "infinite-input";
    case ErrorCode::NotPDivisible: return "non-p-divisible-group";
    case ErrorCode::ModelMismatch: return "model-mismatch";
    case ErrorCode::InsufficientPrecision: return "insufficient-precision";
    case ErrorCode::NotInValuationRing: return "negative-value";
    case ErrorCode::NotPthPower: return "not-a-pth-power";
    case ErrorCode::MultipleRoot: return "multiple-root";
    case ErrorCode::NotIntegral: return "coefficients-not-integral";
    case ErrorCode::Precondition: return "precondition-violation";
    case ErrorCode::CertificationFailed: return "certification-failure";
    case ErrorCode::ApproximantsExhausted: return "approximants-exhausted";
    case ErrorCode::ContradictoryConstraints: return "contradictory-constraints";
    case ErrorCode::SquareRootUnavailable: return "square-root-unavailable";
    case ErrorCode::HypothesisNotMet: return "hypothesis-not-met";
    case ErrorCode::GuardViolation: return "guard-violation";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::InconsistentData: return "inconsistent-data";
    case ErrorCode::UnknownSuite: return "unknown-suite";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(ErrorCode::Parse, "empty rational");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      fail(ErrorCode::Parse, "malformed rational '" + s + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    fail(ErrorCode::Parse, "malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::Parse, "malformed rational '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Value Value::infinity(int rank) {
  if (rank != 1 && rank != 2) fail(ErrorCode::RankMismatch, "rank must be 1 or 2");
  Value v;
  v.rank_ = rank;
  v.infinite_ = true;
  return v;
}

const Rational& Value::q() const {
  if (infinite_) fail(ErrorCode::InfiniteInput, "finite value expected");
  if (rank_ != 1) fail(ErrorCode::RankMismatch, "rank-1 value expected");
  return c_[0];
}

static void require_same_rank(const Value& a, const Value& b) {
  if (a.rank() != b.rank())
    fail(ErrorCode::RankMismatch, "values of rank " + std::to_string(a.rank()) + " and " +
                                      std::to_string(b.rank()));
}

Value Value::operator+(const Value& o) const {
  require_same_rank(*this, o);
  if (infinite_ || o.infinite_) return infinity(rank_);
  Value r = *this;
  r.c_[0] += o.c_[0];
  r.c_[1] += o.c_[1];
  return r;
}

Value Value::operator-() const {
  if (infinite_) fail(ErrorCode::InfiniteInput, "cannot negate infinity");
  Value r = *this;
  r.c_[0] = -r.c_[0];
  r.c_[1] = -r.c_[1];
  return r;
}

Value Value::operator-(const Value& o) const { return *this + (-o); }

Value Value::scaled(const Rational& s) const {
  if (infinite_) {
    if (s > 0) return *this;
    fail(ErrorCode::InfiniteInput, "cannot scale infinity by a non-positive factor");
  }
  Value r = *this;
  r.c_[0] *= s;
  r.c_[1] *= s;
  return r;
}

bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }

std::strong_ordering operator<=>(const Value& a, const Value& b) { return compare(a, b); }

std::strong_ordering compare(const Value& a, const Value& b) {
  require_same_rank(a, b);
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  for (int i = 0; i < a.rank_; ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Value min(const Value& a, const Value& b) { return compare(a, b) <= 0 ? a : b; }
Value max(const Value& a, const Value& b) { return compare(a, b) >= 0 ? a : b; }

std::string Value::str() const {
  if (infinite_) return "inf";
  if (rank_ == 1) return rational_str(c_[0]);
  return "(" + rational_str(c_[0]) + ", " + rational_str(c_[1]) + ")";
}

Value Value::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "inf" || s == "+inf") return infinity(1);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') fail(ErrorCode::Parse, "unterminated rank-2 value '" + s + "'");
    auto inner = s.substr(1, s.size() - 2);
    if (inner == "inf") return infinity(2);
    auto comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
      fail(ErrorCode::Parse, "rank-2 value needs exactly two coordinates: '" + s + "'");
    return Value(parse_rational(inner.substr(0, comma)), parse_rational(inner.substr(comma + 1)));
  }
  return Value(parse_rational(s));
}

namespace ordval {

namespace {

bool is_power_of(Integer n, long p) {
  if (n <= 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool GroupCoordinate::contains(const Rational& x) const {
  Rational scaled = x * denominator;
  scaled.canonicalize();
  switch (kind) {
    case Divisibility::Integers: return scaled.get_den() == 1;
    case Divisibility::PDivisible: return is_power_of(scaled.get_den(), p);
    case Divisibility::Rationals: return true;
  }
  return false;
}

std::string GroupCoordinate::str() const {
  std::string base;
  switch (kind) {
    case Divisibility::Integers: base = "integers"; break;
    case Divisibility::PDivisible: base = "p-divisible(" + std::to_string(p) + ")"; break;
    case Divisibility::Rationals: base = "rationals"; break;
  }
  if (denominator != 1) base = "(1/" + std::to_string(denominator) + ")" + base;
  return base;
}

GroupDescriptor GroupDescriptor::integers() { return {}; }

GroupDescriptor GroupDescriptor::p_divisible(long p) {
  GroupDescriptor g;
  g.coords[0] = {Divisibility::PDivisible, p, 1};
  return g;
}

GroupDescriptor GroupDescriptor::rationals() {
  GroupDescriptor g;
  g.coords[0] = {Divisibility::Rationals, 0, 1};
  return g;
}

GroupDescriptor GroupDescriptor::lex(GroupCoordinate major, GroupCoordinate minor) {
  GroupDescriptor g;
  g.rank = 2;
  g.coords = {major, minor};
  return g;
}

bool GroupDescriptor::contains(const Value& v) const {
  if (v.rank() != rank) return false;
  if (v.is_infinite()) return true;
  for (int i = 0; i < rank; ++i)
    if (!coords[i].contains(v[i])) return false;
  return true;
}

bool GroupDescriptor::is_p_divisible(long p) const {
  for (int i = 0; i < rank; ++i) {
    const auto& c = coords[i];
    if (c.kind == Divisibility::Rationals) continue;
    if (c.kind == Divisibility::PDivisible && c.p == p) continue;
    return false;
  }
  return true;
}

std::string GroupDescriptor::str() const {
  if (rank == 1) return coords[0].str();
  return "lex(" + coords[0].str() + ", " + coords[1].str() + ")";
}

DeltaContext::DeltaContext(long p, Value vp) : p_(p), vp_(std::move(vp)) {
  if (p_ < 2) fail(ErrorCode::Precondition, "p must be a prime >= 2");
  if (vp_.rank() != 1 || vp_.is_infinite() || vp_.q() <= 0)
    fail(ErrorCode::Precondition, "v(p) must be a finite positive rank-1 value");
}

Value DeltaContext::fixed_point() const { return vp_.scaled(make_rational(p_, p_ - 1)); }

static void require_rank1_finite(const Value& g) {
  if (g.rank() != 1) fail(ErrorCode::RankMismatch, "delta is defined on rank-1 values only");
  if (g.is_infinite()) fail(ErrorCode::InfiniteInput, "delta of infinity");
}

Value DeltaContext::delta(const Value& g) const {
  require_rank1_finite(g);
  return Value(vp_.q() + g.q() / p_);
}

Value DeltaContext::delta_iter(long i, const Value& g) const {
  require_rank1_finite(g);
  if (i == 0) return g;
  Integer pi;
  mpz_ui_pow_ui(pi.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(i > 0 ? i : -i));
  // geometric sum 1 + p + ... + p^(|i|-1)
  Integer geo = (pi - 1) / (p_ - 1);
  if (i > 0) {
    Rational base = Rational(geo) * p_ / pi * vp_.q();  // delta^i(0)
    base.canonicalize();
    Rational r = base + g.q() / Rational(pi);
    r.canonicalize();
    return Value(r);
  }
  // delta^-i(0) = -p^i * delta^i(0) = -p * geo * vp
  Rational base = -Rational(geo) * p_ * vp_.q();
  Rational r = base + Rational(pi) * g.q();
  r.canonicalize();
  return Value(r);
}

Value DeltaContext::delta_value_law(const Value& va, const GroupDescriptor& group) const {
  if (!group.is_p_divisible(p_))
    fail(ErrorCode::NotPDivisible, "value group " + group.str() + " is not " +
                                       std::to_string(p_) + "-divisible");
  return delta(va);
}

}  // namespace ordval
}  // namespace ramlab
