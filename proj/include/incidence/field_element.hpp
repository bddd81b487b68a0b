// Copyright 2026 The Incidence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "incidence/detail/arith.hpp"
#include "incidence/detail/parse.hpp"
#include "incidence/tower.hpp"

namespace incidence {

/// An element of a tower in canonical form. Immutable value type; equal
/// elements have identical representations and identical encodings.
class FieldElement {
 public:
  FieldElement() : FieldElement(TowerDescriptor::rationals(), detail::Value{Rational(0)}) {}
  FieldElement(TowerPtr tower, detail::Value value) : tower_(std::move(tower)), value_(std::move(value)) {}

  static FieldElement zero(const TowerPtr& tower) { return {tower, detail::zero(tower->levels())}; }
  static FieldElement one(const TowerPtr& tower) { return {tower, detail::one(tower->levels())}; }
  static FieldElement from_rational(const TowerPtr& tower, const Rational& q) {
    return {tower, detail::from_rational(tower->levels(), q)};
  }
  static FieldElement from_int(const TowerPtr& tower, long v) { return from_rational(tower, Rational(v)); }

  static FieldElement generator(const TowerPtr& tower, std::string_view name) {
    const auto idx = tower->index_of(name);
    if (!idx) throw UnknownGeneratorError(std::string(name));
    const auto lv = tower->levels();
    return {tower, detail::lift(lv, *idx + 1, detail::generator(lv.first(*idx + 1)))};
  }

  const TowerPtr& tower() const noexcept { return tower_; }
  const detail::Value& value() const noexcept { return value_; }

  bool is_zero() const { return detail::is_zero(tower_->levels(), value_); }
  bool is_one() const { return detail::is_one(tower_->levels(), value_); }
  std::optional<Rational> as_rational() const { return detail::as_rational(tower_->levels(), value_); }

  /// Canonical text form; parses back to the same element.
  std::string encoding() const { return detail::format(tower_->levels(), value_); }

  std::size_t hash() const noexcept { return detail::hash_value(value_); }

  FieldElement inverse() const { return {tower_, detail::inv(tower_->levels(), value_)}; }

  FieldElement operator-() const { return {tower_, detail::neg(tower_->levels(), value_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_tower(a.tower_, b.tower_);
    return {a.tower_, detail::add(a.tower_->levels(), a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_tower(a.tower_, b.tower_);
    return {a.tower_, detail::sub(a.tower_->levels(), a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_tower(a.tower_, b.tower_);
    return {a.tower_, detail::mul(a.tower_->levels(), a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_tower(a.tower_, b.tower_);
    return {a.tower_, detail::div(a.tower_->levels(), a.value_, b.value_)};
  }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement pow(unsigned long e) const { return {tower_, detail::pow(tower_->levels(), value_, e)}; }

  /// Elements of different towers compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_tower(a.tower_, b.tower_) && a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.encoding(); }

 private:
  TowerPtr tower_;
  detail::Value value_;
};

/// Parses an expression over the generators of `tower` into canonical form.
/// Throws SyntaxError, UnknownGeneratorError or DivisionByZero.
inline FieldElement parse_element(std::string_view expr, const TowerPtr& tower) {
  return {tower, detail::parse_value(tower->levels(), expr)};
}

inline std::string format(const FieldElement& e) { return e.encoding(); }

inline bool is_zero(const FieldElement& e) { return e.is_zero(); }

enum class ArithOp { add, sub, mul, div };

inline FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
      require_same_tower(a.tower(), b.tower());
      if (b.is_zero()) throw DivisionByZero();
      return a / b;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

}  // namespace incidence

template <>
struct std::hash<incidence::FieldElement> {
  std::size_t operator()(const incidence::FieldElement& e) const noexcept { return e.hash(); }
};
