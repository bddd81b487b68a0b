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

// Specialization homomorphisms: transcendental generators are sent to
// rational values. For a fixed finite configuration all but finitely many
// assignments preserve every incidence and every non-incidence; the
// exceptions are detected and rejected here, never passed through.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "incidence/geometry.hpp"
#include "incidence/incidence.hpp"

namespace incidence {

/// Transcendental generator name -> rational value.
using Assignment = std::map<std::string, Rational>;

class SpecializationError : public Error {
 public:
  enum class Reason {
    unsupported_tower,     // algebraic generators present
    bad_assignment,        // assignment does not match the generators
    denominator_vanishes,
    point_collapse,
    line_collapse,
    line_degenerate,
    retries_exhausted,
  };

  SpecializationError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

namespace detail {

inline Rational eval_rational(Levels lv, const Value& v, std::span<const Rational> at);

inline Rational eval_poly(Levels f, const Poly& p, const Rational& x, std::span<const Rational> at) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + eval_rational(f, *it, at);
  return acc;
}

inline Rational eval_rational(Levels lv, const Value& v, std::span<const Rational> at) {
  if (lv.empty()) return std::get<Rational>(v.rep);
  const auto& fr = std::get<FractionRep>(v.rep);
  const Rational& x = at[lv.size() - 1];
  const Rational den = eval_poly(below(lv), fr.den, x, at);
  if (den == 0)
    throw SpecializationError(SpecializationError::Reason::denominator_vanishes,
                              "denominator vanishes at " + lv.back().name + " = " + to_string(x));
  return eval_poly(below(lv), fr.num, x, at) / den;
}

inline std::vector<Rational> assignment_values(const TowerDescriptor& tower, const Assignment& asg) {
  if (!tower.purely_transcendental())
    throw SpecializationError(SpecializationError::Reason::unsupported_tower,
                              "specialization needs a purely transcendental tower");
  if (asg.size() != tower.size())
    throw SpecializationError(SpecializationError::Reason::bad_assignment,
                              "assignment must give a value to every generator and nothing else");
  std::vector<Rational> values;
  for (const auto& g : tower.generators()) {
    auto it = asg.find(g.name);
    if (it == asg.end())
      throw SpecializationError(SpecializationError::Reason::bad_assignment, "no value for generator '" + g.name + "'");
    values.push_back(it->second);
  }
  return values;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Substitutes `asg` and returns the value as an element of Q.
inline FieldElement specialize_element(const FieldElement& e, const Assignment& asg) {
  const auto values = detail::assignment_values(*e.tower(), asg);
  return FieldElement::from_rational(TowerDescriptor::rationals(),
                                     detail::eval_rational(e.tower()->levels(), e.value(), values));
}

/// Specializes every coordinate and coefficient. Throws SpecializationError
/// if a denominator vanishes, two points or two lines collapse, or a line
/// degenerates; the order of points and lines is preserved otherwise.
inline Configuration specialize_config(const Configuration& cfg, const Assignment& asg) {
  const auto values = detail::assignment_values(*cfg.tower(), asg);
  const auto lv = cfg.tower()->levels();
  const TowerPtr& q = TowerDescriptor::rationals();
  auto spec = [&](const FieldElement& e) {
    return FieldElement::from_rational(q, detail::eval_rational(lv, e.value(), values));
  };
  using Reason = SpecializationError::Reason;

  Configuration out(q);
  std::unordered_map<Point, std::size_t> seen_points;
  for (std::size_t i = 0; i < cfg.points().size(); ++i) {
    Point p{spec(cfg.points()[i].x), spec(cfg.points()[i].y)};
    auto [it, fresh] = seen_points.try_emplace(p, i);
    if (!fresh)
      throw SpecializationError(Reason::point_collapse, "points " + std::to_string(it->second) + " and " +
                                                            std::to_string(i) + " collapse to " + p.x.encoding() +
                                                            ", " + p.y.encoding());
    out.add_point(std::move(p));
  }
  std::unordered_map<Line, std::size_t> seen_lines;
  for (std::size_t j = 0; j < cfg.lines().size(); ++j) {
    const Line& l = cfg.lines()[j];
    const FieldElement a = spec(l.a()), b = spec(l.b()), c = spec(l.c());
    if (a.is_zero() && b.is_zero())
      throw SpecializationError(Reason::line_degenerate, "line " + std::to_string(j) + " degenerates (a = b = 0)");
    Line s = canonical_line(a, b, c);
    auto [it, fresh] = seen_lines.try_emplace(s, j);
    if (!fresh)
      throw SpecializationError(Reason::line_collapse,
                                "lines " + std::to_string(it->second) + " and " + std::to_string(j) + " collapse");
    out.add_line(std::move(s));
  }
  return out;
}

struct SpecializationResult {
  Configuration config;
  Assignment assignment;
  std::size_t attempts = 0;
};

/// Draws assignments from a seeded stream until specialize_config succeeds.
/// Each generator gets numerator in [-R, R] and denominator in [1, D],
/// starting at R = 10^6, D = 100; both bounds double after every rejection.
inline SpecializationResult generic_specialize(const Configuration& cfg, std::uint64_t seed,
                                               std::size_t max_retries = 32) {
  const auto& tower = *cfg.tower();
  if (!tower.purely_transcendental())
    throw SpecializationError(SpecializationError::Reason::unsupported_tower,
                              "specialization needs a purely transcendental tower");
  if (tower.size() == 0) return {cfg, {}, 0};

  std::mt19937_64 rng(seed);
  std::int64_t num_bound = 1'000'000, den_bound = 100;
  std::string last;
  for (std::size_t attempt = 1; attempt <= max_retries; ++attempt) {
    Assignment asg;
    std::uniform_int_distribution<std::int64_t> num_dist(-num_bound, num_bound), den_dist(1, den_bound);
    for (const auto& g : tower.generators()) {
      const std::int64_t n = num_dist(rng), d = den_dist(rng);
      Rational v(Integer(static_cast<long>(n)), Integer(static_cast<long>(d)));
      v.canonicalize();
      asg.emplace(g.name, std::move(v));
    }
    try {
      return {specialize_config(cfg, asg), std::move(asg), attempt};
    } catch (const SpecializationError& e) {
      last = e.what();
    }
    if (num_bound < (std::int64_t{1} << 61)) num_bound *= 2;
    if (den_bound < (std::int64_t{1} << 61)) den_bound *= 2;
  }
  throw SpecializationError(SpecializationError::Reason::retries_exhausted,
                            "no generic assignment within " + std::to_string(max_retries) + " attempts; last: " + last);
}

struct InvarianceReport {
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;             // trials whose matrix differs anywhere
  std::uint64_t mismatched_entries = 0;
  std::size_t rejected_assignments = 0;  // non-generic draws that were resampled
  std::vector<Assignment> assignments;   // one per trial

  bool ok() const noexcept { return failures == 0 && passes == trials; }
};

/// Runs `trials` generic specializations (trial t seeded from seed and t)
/// and compares the complete incidence matrix entrywise each time.
inline InvarianceReport invariance_check(const Configuration& cfg, std::size_t trials, std::uint64_t seed,
                                         std::size_t max_retries = 32) {
  if (trials < 1) throw InvalidArgument("invariance_check: trials must be at least 1");
  const auto before = incidence_matrix(cfg);
  InvarianceReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    auto res = generic_specialize(cfg, detail::splitmix64(seed ^ detail::splitmix64(t)), max_retries);
    report.rejected_assignments += res.attempts > 0 ? res.attempts - 1 : 0;
    const auto after = incidence_matrix(res.config);
    std::uint64_t diff = 0;
    for (std::size_t i = 0; i < before.size(); ++i)
      for (std::size_t j = 0; j < before[i].size(); ++j)
        if (before[i][j] != after[i][j]) ++diff;
    report.mismatched_entries += diff;
    if (diff == 0)
      ++report.passes;
    else
      ++report.failures;
    report.assignments.push_back(std::move(res.assignment));
  }
  return report;
}

}  // namespace incidence
