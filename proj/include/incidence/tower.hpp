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

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incidence/detail/arith.hpp"
#include "incidence/detail/parse.hpp"
#include "incidence/errors.hpp"

namespace incidence {

/// One generator of a tower. For algebraic generators `minpoly` lists the
/// coefficients of a monic minimal polynomial, constant term first, each an
/// expression over the generators declared before this one.
struct GeneratorSpec {
  std::string name;
  GeneratorKind kind = GeneratorKind::transcendental;
  std::vector<std::string> minpoly;
};

class TowerDescriptor;
using TowerPtr = std::shared_ptr<const TowerDescriptor>;

/// The field Q(g_1, ..., g_k), built one generator at a time. Immutable once
/// constructed and always handled through a shared pointer.
class TowerDescriptor {
 public:
  /// Validates the generators and returns the tower. Throws InvalidTower.
  static TowerPtr make(std::vector<GeneratorSpec> generators) {
    auto tower = std::shared_ptr<TowerDescriptor>(new TowerDescriptor());
    std::set<std::string, std::less<>> seen;
    for (auto& spec : generators) {
      if (!valid_identifier(spec.name)) throw InvalidTower("invalid generator name '" + spec.name + "'");
      if (!seen.insert(spec.name).second) throw InvalidTower("duplicate generator name '" + spec.name + "'");
      detail::Level level{spec.name, spec.kind, {}};
      if (spec.kind == GeneratorKind::transcendental) {
        if (!spec.minpoly.empty())
          throw InvalidTower("transcendental generator '" + spec.name + "' has a minimal polynomial");
      } else {
        const detail::Levels f(tower->levels_);
        try {
          for (const auto& c : spec.minpoly) level.minpoly.push_back(detail::parse_value(f, c));
        } catch (const UnknownGeneratorError& e) {
          throw InvalidTower("minimal polynomial of '" + spec.name + "' references '" + e.name() +
                             "', which is not an earlier generator");
        }
        detail::trim(f, level.minpoly);
        if (level.minpoly.size() < 3)
          throw InvalidTower("minimal polynomial of '" + spec.name + "' must have degree >= 2");
        if (!detail::is_one(f, level.minpoly.back()))
          throw InvalidTower("minimal polynomial of '" + spec.name + "' is not monic");
        const detail::Poly g = detail::pgcd(f, level.minpoly, detail::pderivative(f, level.minpoly));
        if (g.size() > 1)
          throw InvalidTower("minimal polynomial of '" + spec.name + "' is not squarefree (shares " +
                             detail::format_poly(f, g, spec.name) + " with its derivative)");
        spec.minpoly.clear();
        for (const auto& c : level.minpoly) spec.minpoly.push_back(detail::format(f, c));
      }
      tower->levels_.push_back(std::move(level));
      tower->signature_ += spec.name;
      if (spec.kind == GeneratorKind::algebraic) {
        tower->signature_ += ":A[";
        for (const auto& c : spec.minpoly) tower->signature_ += c + ";";
        tower->signature_ += "]";
      } else {
        tower->signature_ += ":T";
      }
      tower->signature_ += "|";
      tower->specs_.push_back(std::move(spec));
    }
    return tower;
  }

  /// The shared instance of Q itself.
  static const TowerPtr& rationals() {
    static const TowerPtr q = make({});
    return q;
  }

  /// Q(names...) with every generator transcendental.
  static TowerPtr transcendental(const std::vector<std::string>& names) {
    std::vector<GeneratorSpec> specs;
    for (const auto& n : names) specs.push_back({n, GeneratorKind::transcendental, {}});
    return make(std::move(specs));
  }

  std::size_t size() const noexcept { return specs_.size(); }
  const std::vector<GeneratorSpec>& generators() const noexcept { return specs_; }
  detail::Levels levels() const noexcept { return levels_; }

  bool purely_transcendental() const noexcept {
    for (const auto& s : specs_)
      if (s.kind != GeneratorKind::transcendental) return false;
    return true;
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < specs_.size(); ++i)
      if (specs_[i].name == name) return i;
    return std::nullopt;
  }

  /// Text that identifies the tower up to equality of descriptions.
  const std::string& signature() const noexcept { return signature_; }

  bool same_as(const TowerDescriptor& other) const noexcept {
    return this == &other || signature_ == other.signature_;
  }

 private:
  TowerDescriptor() = default;

  static bool valid_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
  }

  std::vector<GeneratorSpec> specs_;
  std::vector<detail::Level> levels_;
  std::string signature_;
};

inline bool same_tower(const TowerPtr& a, const TowerPtr& b) noexcept { return a->same_as(*b); }

inline void require_same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (!same_tower(a, b)) throw TowerMismatch();
}

}  // namespace incidence
