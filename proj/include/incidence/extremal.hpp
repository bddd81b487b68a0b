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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "incidence/geometry.hpp"
#include "incidence/sumproduct.hpp"

namespace incidence {

/// Sharpness families for point-line incidences plus standard test sets.
enum class FamilyId {
  st_grid,      // [1,N] x [1,2N^2] against y = ax + b, 1 <= a <= N, 1 <= b <= N^2
  point_heavy,  // (x, 0), 1 <= x <= N, against y = 0
  line_heavy,   // (0, 0) against y = ax, 1 <= a <= N
  square_grid,  // [1,N] x [1,N], no lines
  arithmetic_progression,
  geometric_progression,
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::st_grid,     FamilyId::point_heavy,           FamilyId::line_heavy,
    FamilyId::square_grid, FamilyId::arithmetic_progression, FamilyId::geometric_progression};

inline std::string_view to_string(FamilyId f) {
  switch (f) {
    case FamilyId::st_grid: return "st_grid";
    case FamilyId::point_heavy: return "point_heavy";
    case FamilyId::line_heavy: return "line_heavy";
    case FamilyId::square_grid: return "square_grid";
    case FamilyId::arithmetic_progression: return "arithmetic_progression";
    case FamilyId::geometric_progression: return "geometric_progression";
  }
  return "?";
}

inline std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

inline bool is_incidence_family(FamilyId f) {
  return f == FamilyId::st_grid || f == FamilyId::point_heavy || f == FamilyId::line_heavy;
}

inline bool is_set_family(FamilyId f) {
  return f == FamilyId::arithmetic_progression || f == FamilyId::geometric_progression;
}

struct FamilyParams {
  Rational start = 1;  // first term of either progression
  Rational step = 1;   // arithmetic difference, nonzero
  Rational ratio = 2;  // geometric ratio, not 0 or +-1
};

/// Point-line families. Integer coordinates, embedded into `tower`.
inline Configuration generate_configuration(FamilyId family, std::uint64_t n,
                                            const TowerPtr& tower = TowerDescriptor::rationals()) {
  if (n < 1) throw InvalidArgument("generate: N must be at least 1");
  if (is_set_family(family)) throw InvalidArgument("generate: " + std::string(to_string(family)) + " is a set family");
  auto num = [&](std::uint64_t v) { return FieldElement::from_rational(tower, Rational(Integer(std::to_string(v)))); };
  const FieldElement zero = FieldElement::zero(tower), one = FieldElement::one(tower);
  Configuration cfg(tower);
  switch (family) {
    case FamilyId::st_grid:
      for (std::uint64_t x = 1; x <= n; ++x)
        for (std::uint64_t y = 1; y <= 2 * n * n; ++y) cfg.add_point({num(x), num(y)});
      for (std::uint64_t a = 1; a <= n; ++a)
        for (std::uint64_t b = 1; b <= n * n; ++b) cfg.add_line(canonical_line(num(a), -one, num(b)));
      break;
    case FamilyId::point_heavy:
      for (std::uint64_t x = 1; x <= n; ++x) cfg.add_point({num(x), zero});
      cfg.add_line(canonical_line(zero, one, zero));
      break;
    case FamilyId::line_heavy:
      cfg.add_point({zero, zero});
      for (std::uint64_t a = 1; a <= n; ++a) cfg.add_line(canonical_line(num(a), -one, zero));
      break;
    case FamilyId::square_grid:
      for (std::uint64_t x = 1; x <= n; ++x)
        for (std::uint64_t y = 1; y <= n; ++y) cfg.add_point({num(x), num(y)});
      break;
    default: break;
  }
  return cfg;
}

/// Progressions start, start+step, ... or start, start*ratio, ... of length N.
inline ElementSet generate_set(FamilyId family, std::uint64_t n, const FamilyParams& params = {},
                               const TowerPtr& tower = TowerDescriptor::rationals()) {
  if (n < 1) throw InvalidArgument("generate: N must be at least 1");
  ElementSet out(tower);
  if (family == FamilyId::arithmetic_progression) {
    if (params.step == 0) throw InvalidArgument("generate: arithmetic step must be nonzero");
    Rational v = params.start;
    for (std::uint64_t i = 0; i < n; ++i, v += params.step) out.insert(FieldElement::from_rational(tower, v));
  } else if (family == FamilyId::geometric_progression) {
    if (params.ratio == 0 || params.ratio == 1 || params.ratio == -1)
      throw InvalidArgument("generate: geometric ratio must not be 0, 1 or -1");
    if (params.start == 0) throw InvalidArgument("generate: geometric start must be nonzero");
    Rational v = params.start;
    for (std::uint64_t i = 0; i < n; ++i, v *= params.ratio) out.insert(FieldElement::from_rational(tower, v));
  } else {
    throw InvalidArgument("generate: " + std::string(to_string(family)) + " is not a set family");
  }
  return out;
}

inline std::variant<Configuration, ElementSet> generate(FamilyId family, std::uint64_t n,
                                                        const FamilyParams& params = {},
                                                        const TowerPtr& tower = TowerDescriptor::rationals()) {
  if (is_set_family(family)) return generate_set(family, n, params, tower);
  return generate_configuration(family, n, tower);
}

/// N^4 for st_grid, N for the other two incidence families.
inline std::uint64_t expected_incidences(FamilyId family, std::uint64_t n) {
  switch (family) {
    case FamilyId::st_grid: return n * n * n * n;
    case FamilyId::point_heavy:
    case FamilyId::line_heavy: return n;
    default: throw InvalidArgument("expected_incidences: " + std::string(to_string(family)) + " is not an incidence family");
  }
}

}  // namespace incidence
