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

// Seeded random elements and configurations for property checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "incidence/geometry.hpp"

namespace incidence {

struct RandomElementOptions {
  unsigned max_degree = 2;  // total degree in the transcendental generators
  unsigned max_terms = 3;
  long coeff_bound = 5;
  long den_bound = 3;       // rational coefficient denominators in [1, den_bound]
  bool fractions = true;    // allow a nonconstant denominator
};

/// Random polynomial in the generators with small rational coefficients.
/// Powers of an algebraic generator stay below the degree of its
/// minimal polynomial.
template <class Rng>
FieldElement random_polynomial(const TowerPtr& tower, Rng& rng, const RandomElementOptions& opt = {}) {
  std::uniform_int_distribution<long> coeff(-opt.coeff_bound, opt.coeff_bound);
  std::uniform_int_distribution<long> den(1, std::max(1L, opt.den_bound));
  std::uniform_int_distribution<unsigned> terms(1, std::max(1u, opt.max_terms));
  FieldElement acc = FieldElement::zero(tower);
  const unsigned count = terms(rng);
  for (unsigned t = 0; t < count; ++t) {
    FieldElement mono = FieldElement::from_rational(tower, Rational(coeff(rng)) / Rational(den(rng)));
    unsigned budget = opt.max_degree;
    for (std::size_t g = 0; g < tower->size(); ++g) {
      const auto& spec = tower->generators()[g];
      unsigned cap = budget;
      if (spec.kind == GeneratorKind::algebraic) cap = static_cast<unsigned>(spec.minpoly.size()) - 2;
      const unsigned e = std::uniform_int_distribution<unsigned>(0, cap)(rng);
      if (spec.kind == GeneratorKind::transcendental) budget -= e;
      if (e > 0) mono *= FieldElement::generator(tower, spec.name).pow(e);
    }
    acc += mono;
  }
  return acc;
}

template <class Rng>
FieldElement random_element(const TowerPtr& tower, Rng& rng, const RandomElementOptions& opt = {}) {
  FieldElement num = random_polynomial(tower, rng, opt);
  if (!opt.fractions || tower->size() == 0 || std::bernoulli_distribution(0.5)(rng)) return num;
  for (;;) {
    FieldElement den = random_polynomial(tower, rng, opt);
    if (!den.is_zero()) return num / den;
  }
}

template <class Rng>
FieldElement random_nonzero(const TowerPtr& tower, Rng& rng, const RandomElementOptions& opt = {}) {
  for (;;) {
    FieldElement e = random_element(tower, rng, opt);
    if (!e.is_zero()) return e;
  }
}

/// Up to m points and n lines. About half of the lines pass through two
/// existing points so that incidences actually occur.
template <class Rng>
Configuration random_configuration(const TowerPtr& tower, std::size_t m, std::size_t n, Rng& rng,
                                   const RandomElementOptions& opt = {}) {
  Configuration cfg(tower);
  for (std::size_t i = 0; i < m; ++i) cfg.add_point({random_element(tower, rng, opt), random_element(tower, rng, opt)});
  std::bernoulli_distribution planted(0.5);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& pts = cfg.points();
    if (pts.size() >= 2 && planted(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      const std::size_t a = pick(rng), b = pick(rng);
      if (a != b) {
        cfg.add_line(line_through(pts[a], pts[b]));
        continue;
      }
    }
    FieldElement a = random_element(tower, rng, opt), b = random_element(tower, rng, opt);
    if (a.is_zero() && b.is_zero()) b = FieldElement::one(tower);
    cfg.add_line(canonical_line(a, b, random_element(tower, rng, opt)));
  }
  return cfg;
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).is_zero();
}

/// m rational points, no three collinear (rejection sampling).
template <class Rng>
std::vector<Point> random_general_position(std::size_t m, Rng& rng, long bound = 10'000) {
  const TowerPtr& q = TowerDescriptor::rationals();
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::vector<Point> pts;
  while (pts.size() < m) {
    Point p{FieldElement::from_int(q, coord(rng)), FieldElement::from_int(q, coord(rng))};
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      if (pts[i] == p) ok = false;
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
        if (collinear(pts[i], pts[j], p)) ok = false;
    }
    if (ok) pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace incidence
