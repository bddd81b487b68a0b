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

#include <stdexcept>
#include <string>
#include <utility>

namespace incidence {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed element expression or config document.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

class UnknownGeneratorError : public Error {
 public:
  explicit UnknownGeneratorError(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Inversion hit a nontrivial common factor of an element and a minimal
/// polynomial, i.e. that minimal polynomial is reducible.
class ZeroDivisorError : public Error {
 public:
  ZeroDivisorError(std::string generator, std::string factor)
      : Error("zero divisor: minimal polynomial of '" + generator +
              "' has the factor " + factor),
        generator_(std::move(generator)),
        factor_(std::move(factor)) {}
  const std::string& generator() const noexcept { return generator_; }
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string generator_;
  std::string factor_;
};

class InvalidTower : public Error {
 public:
  using Error::Error;
};

class TowerMismatch : public Error {
 public:
  TowerMismatch() : Error("operands belong to different towers") {}
};

/// Degenerate line, equal points, singular matrix and similar.
class GeometryError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace incidence
