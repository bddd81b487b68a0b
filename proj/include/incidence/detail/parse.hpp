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

// Recursive-descent parser for element expressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "incidence/detail/arith.hpp"

namespace incidence::detail {

class ExpressionParser {
 public:
  ExpressionParser(Levels lv, std::string_view text) : lv_(lv), text_(text) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                      "': " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = add(lv_, v, term());
      else if (accept('-'))
        v = sub(lv_, v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(lv_, v, unary());
      } else if (accept('/')) {
        Value d = unary();
        if (is_zero(lv_, d)) throw DivisionByZero();
        v = div(lv_, v, d);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return neg(lv_, unary());
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) {
      skip_ws();
      const std::string digits = take_digits();
      if (digits.empty()) fail("expected nonnegative integer exponent");
      if (digits.size() > 6) fail("exponent too large");
      return pow(lv_, std::move(base), std::stoul(digits));
    }
    return base;
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      return from_rational(lv_, Rational(Integer(take_digits(), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < lv_.size(); ++i) {
        if (lv_[i].name == name) return lift(lv_, i + 1, generator(lv_.first(i + 1)));
      }
      throw UnknownGeneratorError(name);
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  Levels lv_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Value parse_value(Levels lv, std::string_view text) { return ExpressionParser(lv, text).parse(); }

}  // namespace incidence::detail
